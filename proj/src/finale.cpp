#include "finale.hpp"

#include <algorithm>

#include "errors.hpp"
#include "parallel.hpp"

namespace singmod {

namespace {

// det [[1, a1, b1], [1, a2, b2], [1, a3, b3]].
template <class T>
T det3(const T& a1, const T& b1, const T& a2, const T& b2, const T& a3, const T& b3) {
  return (a2 * b3 - a3 * b2) - (a1 * b3 - a3 * b1) + (a1 * b2 - a2 * b1);
}

}  // namespace

DeterminantBall determinant_ball(const OrbitPairing& pairing, unsigned long m, unsigned long n,
                                 mpfr_prec_t prec, mpfr_prec_t cap) {
  if (m == 0 || n == 0) throw InvalidArgument("finale", "m and n must be positive");
  DeterminantBall out;
  for (mpfr_prec_t p = std::max(prec, kDefaultPrecision);; p *= 2) {
    std::array<CBall, 3> a, b;
    for (int i = 0; i < 3; ++i) {
      AlgebraicNumber xi = p > pairing.x[i].prec() ? refine(pairing.x[i], p) : pairing.x[i];
      AlgebraicNumber yi = p > pairing.y[i].prec() ? refine(pairing.y[i], p) : pairing.y[i];
      a[i] = pow(xi.value(), m);
      b[i] = pow(yi.value(), n);
    }
    out.value = det3(a[0], b[0], a[1], b[1], a[2], b[2]);
    out.precision = p;
    out.real_part_contains_zero = out.value.re.contains_zero();
    out.certified_nonzero = !out.value.im.contains_zero();
    if (out.certified_nonzero || p * 2 > cap) return out;
  }
}

mpq_class exact_norm_check(const SplittingField& sf, unsigned long m, unsigned long n) {
  QPoly f(sf.minpoly);
  std::array<QPoly, 3> a, b;
  for (int i = 0; i < 3; ++i) {
    a[i] = powmod(sf.x[i], m, f);
    b[i] = powmod(sf.y[i], n, f);
  }
  QPoly delta = det3(a[0], b[0], a[1], b[1], a[2], b[2]) % f;
  QPoly sq = mulmod(delta, delta, f);
  if (sq.degree() > 0) throw InvariantViolation("finale", "delta^2 is not rational");
  return sq.is_zero() ? mpq_class(0) : mpq_class(-sq.c[0]);
}

NonvanishingCheck check_pair(const CaseData& c, long m, long n, mpfr_prec_t prec, mpfr_prec_t cap) {
  NonvanishingCheck chk;
  chk.m = m;
  chk.n = n;
  chk.ball = determinant_ball(c.pairing, static_cast<unsigned long>(m), static_cast<unsigned long>(n), prec, cap);
  chk.norm = exact_norm_check(c.sf, static_cast<unsigned long>(m), static_cast<unsigned long>(n));
  chk.norm_nonzero = chk.norm != 0;
  bool contains = sqr(chk.ball.value.im).contains(chk.norm);
  chk.routes_agree = (chk.ball.certified_nonzero == chk.norm_nonzero) && contains && chk.ball.real_part_contains_zero;
  return chk;
}

CaseVerdict close_case(const CaseData& c, const MasterResult& master,
                       const std::vector<std::pair<long, long>>& required,
                       const std::vector<std::pair<long, long>>& checked, unsigned jobs, mpfr_prec_t prec,
                       mpfr_prec_t cap) {
  CaseVerdict v;
  if (!master.contradiction) {
    v.failing_stage = "bounds";
    v.detail = "the m >= 13 branch is not contradictory";
    return v;
  }
  for (const auto& pr : required) {
    if (std::find(checked.begin(), checked.end(), pr) == checked.end()) {
      v.failing_stage = "finale";
      v.detail = "residual pair (" + std::to_string(pr.first) + "," + std::to_string(pr.second) + ") not checked";
      return v;
    }
  }
  v.checks.resize(checked.size());
  parallel_for(checked.size(), jobs, [&](std::size_t i) {
    v.checks[i] = check_pair(c, checked[i].first, checked[i].second, prec, cap);
  });
  for (const auto& chk : v.checks) {
    if (!chk.passed()) {
      v.failing_stage = "finale";
      v.detail = "determinant at (" + std::to_string(chk.m) + "," + std::to_string(chk.n) + ") not certified nonzero";
      return v;
    }
  }
  v.proven = true;
  return v;
}

}  // namespace singmod
