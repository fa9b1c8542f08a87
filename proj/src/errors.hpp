#pragma once

#include <stdexcept>
#include <string>

namespace singmod {

// Base for every failure raised by the engine. `stage` names the pipeline
// step that raised it so the CLI can report where a run stopped.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Malformed input (bad discriminant, zero divisor, unsupported degree...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Working precision was not enough to decide a predicate. Callers that own a
// precision budget catch this and retry at a higher precision.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Something that must hold mathematically did not. Never retried.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace singmod
