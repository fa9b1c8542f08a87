#pragma once

// Brute-force and sampled cross-checks of the pipeline.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"

namespace singmod {

struct OracleReport {
  std::string name;
  long passed = 0;
  long total = 0;
  std::vector<std::string> lines;     // one summary line per sub-check
  std::vector<std::string> failures;  // witness inputs of mismatches
  bool ok() const { return total > 0 && passed == total && failures.empty(); }
  std::string summary() const;
};

// Valuation formula against repeated multiplication, m = 1..max_m, at the
// scanned place and at the printed prime.
OracleReport valuation_scan_oracle(const CaseData& c, unsigned long max_m);

// Random rows m and n <= n_max(m) + 50: n <= n_max(m) exactly when
// n log|y1/y2| <= log c2(m) + m log|x1/x2| is not certainly violated.
OracleReport table_sample_oracle(const CaseData& c, unsigned samples, std::uint64_t seed);

// Ball determinant against the exact norm on the given pairs.
OracleReport ball_vs_exact_oracle(const CaseData& c, const std::vector<std::pair<long, long>>& pairs,
                                  unsigned jobs = 1);

// h(a^n) = n h(a), h(1/a) = h(a) and h(ab) <= h(a) + h(b) on random
// algebraic numbers of degree 2 and 3.
OracleReport height_laws_oracle(unsigned trials, std::uint64_t seed);

// lower_bound(beta, m) <= |1 - beta^m| for m = 1..max_m.
OracleReport lower_bound_oracle(const CaseData& c, unsigned long max_m);

// Sum of e f over the places above each prime 7 < p <= limit equals 6.
OracleReport place_degree_oracle(const CaseData& c, long prime_limit);

}  // namespace singmod
