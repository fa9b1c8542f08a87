#pragma once

// Orchestration of one or both cases and the certificate document.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "finale.hpp"

namespace singmod {

inline constexpr const char* kCertificateSchema = "singmod-certificate/1";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string case_selector = "both";  // "23", "31" or "both"
  CaseConfig case_config;
  unsigned jobs = 1;
};

// Throws InvalidArgument on a bad selector, precision <= 0, base > cap,
// prime limit below 11 or jobs == 0.
void validate_config(const RunConfig& config);
std::vector<CaseId> selected_cases(const std::string& selector);

struct CaseRun {
  CaseData data;
  MasterResult master;
  MasterResult replay;  // printed c1 at the printed prime
  std::vector<BoundTableRow> table;
  std::vector<ResidualRow> rows;
  std::vector<std::pair<long, long>> residual;
  bool residual_matches_printed = false;
  bool routes_agree = false;  // both local routes at the scanned prime
  Ball height_x;              // h(x1), for the d = 3 reconstruction of c1
  Ball c1_reconstruction;     // c1 formula with d = 3 and h = 2 h(x1)
  CaseVerdict verdict;
};

CaseRun run_case(const CaseId& id, const RunConfig& config);

struct CertifyResult {
  std::vector<CaseRun> runs;
  bool proven = false;
  std::vector<std::string> diagnostics;  // cache status and similar, not part of the certificate
  Json certificate;
};

CertifyResult certify(const RunConfig& config);

// Deterministic text form (two-space indent, trailing newline).
std::string certificate_text(const Json& cert);

// Parses a certificate, rejecting unknown schema versions and missing keys.
Json load_certificate(const std::string& text);

struct RecheckReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-checks a loaded certificate without regenerating it: exact identities of
// the class polynomials, relator and theta expressions, the bound bookkeeping
// (m ceilings, kept rows, residual set) and the nonvanishing records.
RecheckReport recheck_certificate(const Json& cert);

// Decimal with 20 significant digits and the least k with
// |value - decimal| <= 2^k (null when exact).
Json real_json(const Ball& x);
Json complex_json(const CBall& z);

}  // namespace singmod
