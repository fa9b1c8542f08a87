#pragma once

// Nonvanishing of det[[1, x_i^m, y_i^n]] for the residual pairs, by a ball
// evaluation and by an exact norm in Q(theta).

#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"

namespace singmod {

struct DeterminantBall {
  CBall value;
  mpfr_prec_t precision = 0;
  bool real_part_contains_zero = false;  // rows 2 and 3 are conjugate
  bool certified_nonzero = false;        // 0 outside the imaginary part
};

// Evaluates the determinant from the labelled conjugates, doubling the
// precision from `prec` up to `cap` until the imaginary part excludes 0.
DeterminantBall determinant_ball(const OrbitPairing& pairing, unsigned long m, unsigned long n,
                                 mpfr_prec_t prec = kDefaultPrecision,
                                 mpfr_prec_t cap = kDefaultPrecisionCap);

// delta = det evaluated in Q[t]/(minpoly theta); delta^2 is rational and
// -delta^2, the product of delta over the two conjugate labellings, is returned.
mpq_class exact_norm_check(const SplittingField& sf, unsigned long m, unsigned long n);

struct NonvanishingCheck {
  long m = 0;
  long n = 0;
  DeterminantBall ball;
  mpq_class norm;
  bool norm_nonzero = false;
  bool routes_agree = false;  // ball nonzero <=> norm nonzero, and Im(det)^2 contains the norm
  bool passed() const { return ball.certified_nonzero && norm_nonzero && routes_agree; }
};

NonvanishingCheck check_pair(const CaseData& c, long m, long n, mpfr_prec_t prec = kDefaultPrecision,
                             mpfr_prec_t cap = kDefaultPrecisionCap);

struct CaseVerdict {
  bool proven = false;
  std::string failing_stage;  // empty when proven
  std::string detail;
  std::vector<NonvanishingCheck> checks;
};

// PROVEN iff the m >= 13 branch is contradictory, the table with the p-adic
// ceiling leaves exactly `required` pairs, and every required pair is among
// `checked` and passes both routes.
CaseVerdict close_case(const CaseData& c, const MasterResult& master,
                       const std::vector<std::pair<long, long>>& required,
                       const std::vector<std::pair<long, long>>& checked, unsigned jobs = 1,
                       mpfr_prec_t prec = kDefaultPrecision, mpfr_prec_t cap = kDefaultPrecisionCap);

}  // namespace singmod
