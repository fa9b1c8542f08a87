#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ball.hpp"
#include "poly.hpp"

namespace singmod {

inline constexpr mpfr_prec_t kDefaultPrecisionCap = 4096;

// Throws InvalidArgument unless d < 0 and d = 0, 1 (mod 4).
void validate_discriminant(long d);

struct QuadraticForm {
  long a = 0;
  long b = 0;
  long c = 0;

  long discriminant() const { return b * b - 4 * a * c; }
  // Ambiguous forms are equivalent to their opposite; their j-value is real.
  bool is_ambiguous() const { return b == 0 || b == a || a == c; }
  std::string to_string() const;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// One reduced primitive form per class, sorted by a then b.
std::vector<QuadraticForm> reduced_forms(long d);

// Coefficients c_0..c_n of j(q) * q = 1 + 744 q + 196884 q^2 + ...
// (index k is the coefficient of q^(k-1) in j).
std::vector<mpz_class> j_series(std::size_t n);

// j((-b + sqrt(d)) / 2a) for the given form. The number of series terms is
// chosen from |q| so that the certified radius is at most 2^(-prec/2).
CBall eval_j(const QuadraticForm& form, mpfr_prec_t prec = kDefaultPrecision);

// Number of q-series terms eval_j uses for the given form and precision.
std::size_t j_terms(const QuadraticForm& form, mpfr_prec_t prec);

struct ClassPolynomial {
  long discriminant = 0;
  ZPoly poly;                         // monic, degree = class number
  std::vector<QuadraticForm> forms;   // canonical order
  std::vector<CBall> roots;           // j-values in form order
  mpfr_prec_t precision = 0;          // precision at which rounding succeeded
  bool stable = false;                // identical integers at twice the precision
  std::string cache_status = "disabled";
};

// Builds H_d by rounding the ball product of (X - j(tau)). Precision starts at
// `prec` and doubles up to `cap` while rounding is ambiguous. If `cache_dir` is
// non-empty the text cache there is consulted and re-verified.
ClassPolynomial hilbert_class_poly(long d, mpfr_prec_t prec = kDefaultPrecision,
                                   mpfr_prec_t cap = kDefaultPrecisionCap,
                                   const std::string& cache_dir = "");

// Text cache: one line "d: c0,c1,...,ch" per discriminant.
std::optional<ZPoly> cache_lookup(const std::string& dir, long d);
void cache_store(const std::string& dir, long d, const ZPoly& poly);

// Index of the unique real root that dominates all others in modulus.
// Throws InvariantViolation when the pattern does not hold.
std::size_t dominant_root(const ClassPolynomial& h);

}  // namespace singmod
