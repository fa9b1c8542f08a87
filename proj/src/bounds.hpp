#pragma once

// The archimedean side of the elimination: denominator lower bounds for the
// collinearity identity, the master inequality in n for m >= 13, and the
// per-m constants c2(m) with their n ceilings.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmn.hpp"
#include "places.hpp"
#include "quadforms.hpp"

namespace singmod {

struct CaseConfig {
  mpfr_prec_t precision = kDefaultPrecision;
  mpfr_prec_t precision_cap = kDefaultPrecisionCap;
  long prime_limit = 200;
  std::string cache_dir;
};

// Printed reference values for one case.
struct PrintedValues {
  long printed_prime = 0;
  std::string c1;                 // decimal text
  long positivity_threshold = 0;  // positive provided n > threshold - 1 (0: not printed)
  long threshold98 = 0;           // the 0.98 form holds for n >= threshold98
  long n_max = 0;
  long implied_m = 0;
  std::vector<double> c2;         // m = 1..12
  std::vector<long> table_n;      // m = 1..12
  std::vector<std::pair<long, long>> residual_rows;  // (m, n ceiling)
};

struct CaseId {
  std::string name;  // "23" or "31"
  long dx = 0;       // x side, dx = 4 dy
  long dy = 0;
};

CaseId case_by_name(const std::string& name);
const PrintedValues& printed_values(const CaseId& id);

struct ArchimedeanData {
  Ball log_x12;  // log|x1/x2|
  Ball log_y12;  // log|y1/y2|
  Ball abs_x31;  // |x3/x1|
  Ball abs_y31;  // |y3/y1|
};

struct CaseData {
  CaseId id;
  ClassPolynomial hx;
  ClassPolynomial hy;
  OrbitPairing pairing;
  SplittingField sf;
  ValuationPattern pattern;                     // first match of the scan
  std::optional<ValuationPattern> printed_pattern;  // at the printed prime
  AlgebraicNumber beta;   // x3 / x2
  AlgebraicNumber alpha;  // y3 / y2
  ArchimedeanData arch;
  BakerConstant baker;
};

// Runs class polynomials, pairing, splitting field, valuation scan and the
// Baker constant for one case.
CaseData build_case(const CaseId& id, const CaseConfig& config = {});

// Checks the archimedean invariants: |x1/x2| > 1, |y1/y2| > 1,
// |x3/x1| < 1, |y3/y1| < 1 and |y3/y2| = 1.
ArchimedeanData archimedean_data(const OrbitPairing& pairing);

// Everything the m >= 13 branch depends on.
struct MasterInputs {
  Ball c1;      // used at its upper edge
  long p = 0;
  int e = 0;
  long v0 = 0;
  ArchimedeanData arch;
};

MasterInputs master_inputs(const CaseData& c);
// Same inputs with the printed c1 and, when available, the printed prime.
MasterInputs printed_master_inputs(const CaseData& c);

// e log n / log p + v0.
Ball exponent_ceiling(const MasterInputs& in, unsigned long n);
long exponent_ceiling_floor(const MasterInputs& in, unsigned long n);

// m >= 13: 0.99 exp(-c1 (log M(n))^2) - |y3/y1|^n with M the p-adic ceiling.
// m < 13: the ball |1 - (y3/y1)^n - (x3/x2)^m| from the explicit conjugates.
// Returns the lower edge when it is certifiably positive.
std::optional<Ball> denominator_lower_bound(const CaseData& c, unsigned long m, unsigned long n);
Ball m_free_denominator(const MasterInputs& in, unsigned long n);

struct MasterResult {
  Ball K;                      // (2 + |x3/x1|^13) / 0.98
  bool K_within_2_05 = false;
  long positivity_threshold = 0;  // least T with the bound positive for all n >= T
  long threshold98 = 0;           // least T with the bound >= 0.98 exp(...) for all n >= T
  long n_max = 0;                 // largest n satisfying the master inequality
  long implied_m = 0;             // floor of M(n_max)
  long small_n_m = 0;             // floor of M(threshold98)
  bool contradiction = false;     // both m ceilings fall below 13
};

MasterResult master_n_bound(const MasterInputs& in);

struct BoundTableRow {
  long m = 0;
  Ball c2;
  long n_max = 0;
  bool matches_printed = false;  // n ceiling equals the printed one
  bool c2_matches_printed = false;  // c2 agrees with the printed value to 2 decimals
};

std::vector<BoundTableRow> c2_table(const CaseData& c, const PrintedValues* printed = nullptr);

struct ResidualRow {
  long m = 0;
  long n_max = 0;
  Ball ceiling;  // M(n_max(m))
  bool kept = false;
};

std::vector<ResidualRow> residual_rows(const MasterInputs& in, const std::vector<BoundTableRow>& table);
std::vector<std::pair<long, long>> residual_set(const std::vector<ResidualRow>& rows);

}  // namespace singmod
