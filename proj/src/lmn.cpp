#include "lmn.hpp"

#include "errors.hpp"

namespace singmod {

Ball lower_point(const Ball& x) {
  Float lo = x.lower();
  return Ball::from_endpoints(lo.get(), lo.get(), x.prec());
}

Ball upper_point(const Ball& x) {
  Float hi = x.upper();
  return Ball::from_endpoints(hi.get(), hi.get(), x.prec());
}

Ball c1_prime(int d, mpfr_prec_t prec) {
  if (d < 2) throw InvalidArgument("lmn", "d must be >= 2");
  Ball D = Ball::from_mpq(mpq_class(d, 2), prec);
  Ball extra = Ball::from_decimal("4.49", prec) - Ball::from_decimal("0.96", prec) * D;
  if (extra.is_negative()) return D;
  if (!extra.is_positive()) {
    Float zero(prec);
    mpfr_set_zero(zero.get(), 1);
    extra = Ball::from_endpoints(zero.get(), extra.upper().get(), prec);
  }
  return D + extra / Ball::log_const(13, prec);
}

Ball c1_formula(int d, const Ball& h, mpfr_prec_t prec) {
  Ball cp = c1_prime(d, prec);
  Ball D = Ball::from_mpq(mpq_class(d, 2), prec);
  Ball l13 = Ball::log_const(13, prec);
  Ball l13sq = sqr(l13);
  Ball dh = D * h + Ball::from_decimal("25.84", prec);
  Ball main = Ball::from_decimal("9.03", prec) * sqr(cp) * dh;
  Ball t2 = Ball::from_int(2, prec) * cp / l13;
  Ball t3 = Ball::from_int(2, prec) * log(l13) / l13sq;
  Ball t4 = (Ball::from_decimal("0.23", prec) * dh + Ball::from_int(2, prec) * log(cp) +
             Ball::from_decimal("0.7", prec) * D - Ball::from_decimal("2.07", prec)) /
            l13sq;
  return main + t2 + t3 + t4;
}

namespace {

std::size_t unique_root(const std::vector<CBall>& roots, const CBall& z) {
  std::size_t hit = roots.size();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].overlaps(z)) continue;
    if (hit != roots.size()) throw PrecisionError("lmn", "value overlaps several roots");
    hit = i;
  }
  if (hit == roots.size()) throw PrecisionError("lmn", "value overlaps no root");
  return hit;
}

bool reciprocal(const ZPoly& f) {
  const int d = f.degree();
  bool plus = true, minus = true;
  for (int i = 0; i <= d; ++i) {
    plus = plus && f.c[i] == f.c[d - i];
    minus = minus && f.c[i] == -f.c[d - i];
  }
  return plus || minus;
}

}  // namespace

bool on_unit_circle(const AlgebraicNumber& alpha) {
  if (!abs(alpha.value()).contains(mpz_class(1))) return false;
  if (!reciprocal(alpha.minpoly)) return false;
  AlgebraicNumber a = alpha;
  for (int attempt = 0; attempt < 5; ++attempt) {
    try {
      std::size_t i = unique_root(a.roots, conj(a.value()));
      std::size_t j = unique_root(a.roots, inverse(a.value()));
      return i == j;
    } catch (const PrecisionError&) {
      a = refine(a, a.prec() * 2);
    }
  }
  throw PrecisionError("lmn", "unit-circle check undecided");
}

BakerConstant c1(const AlgebraicNumber& alpha) {
  if (!on_unit_circle(alpha)) throw InvalidArgument("lmn", "|alpha| != 1");
  if (is_root_of_unity(alpha)) throw InvalidArgument("lmn", "alpha is a root of unity");
  BakerConstant out;
  out.d = alpha.degree();
  const mpfr_prec_t prec = kDefaultPrecision;
  out.D = Ball::from_mpq(mpq_class(out.d, 2), prec);
  out.h = height(alpha);
  out.c1p = c1_prime(out.d, prec);
  out.c1 = c1_formula(out.d, upper_point(out.h), prec);
  return out;
}

Ball one_minus_power_abs(const AlgebraicNumber& alpha, unsigned long m, mpfr_prec_t cap) {
  AlgebraicNumber a = alpha;
  while (true) {
    const mpfr_prec_t prec = a.prec();
    Ball v = abs(CBall::from_mpz(mpz_class(1), prec) - pow(a.value(), m));
    if (v.is_positive()) return v;
    if (prec * 2 > cap) throw PrecisionError("lmn", "|1 - alpha^m| not separated from 0");
    a = refine(a, prec * 2);
  }
}

Ball asymptotic_bound(const Ball& c1v, unsigned long m, mpfr_prec_t prec) {
  Ball lm = log(Ball::from_mpz(mpz_class(m), prec));
  Ball v = Ball::from_decimal("0.99", prec) * exp(-(upper_point(c1v) * sqr(lm)));
  return v;
}

LowerBoundResult lower_bound(const AlgebraicNumber& alpha, const BakerConstant& baker, unsigned long m) {
  if (m == 0) throw InvalidArgument("lmn", "m must be positive");
  LowerBoundResult out;
  out.m = m;
  if (m < kAsymptoticFrom) {
    out.mode = BoundMode::Direct;
    out.value = one_minus_power_abs(alpha, m);
  } else {
    out.mode = BoundMode::Asymptotic;
    out.value = asymptotic_bound(baker.c1, m, baker.c1.prec());
  }
  out.bound = lower_point(out.value);
  if (!out.bound.is_positive()) throw InvariantViolation("lmn", "lower bound is not positive");
  return out;
}

}  // namespace singmod
