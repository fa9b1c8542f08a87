#include "bounds.hpp"

#include <cmath>

#include "errors.hpp"

namespace singmod {

CaseId case_by_name(const std::string& name) {
  if (name == "23") return {"23", -92, -23};
  if (name == "31") return {"31", -124, -31};
  throw InvalidArgument("bounds", "unknown case '" + name + "'");
}

const PrintedValues& printed_values(const CaseId& id) {
  static const PrintedValues case23{
      23, "4973.14", 2075, 2076, 2092, 5,
      {1.15, 1.21, 11.97, 1.10, 1.28, 6.00, 1.07, 1.38, 4.02, 1.04, 1.50, 3.04},
      {2, 5, 8, 10, 13, 16, 18, 21, 24, 26, 29, 32},
      {{1, 2}, {2, 5}}};
  static const PrintedValues case31{
      11, "4820.16", 0, 1441, 1720, 5,
      {1.13, 1.25, 6.17, 1.06, 1.44, 3.13, 1.02, 1.76, 2.13, 1.01, 2.33, 1.65},
      {3, 6, 10, 13, 16, 19, 22, 26, 29, 32, 36, 39},
      {{1, 3}, {2, 6}}};
  if (id.name == "23") return case23;
  if (id.name == "31") return case31;
  throw InvalidArgument("bounds", "no printed values for case '" + id.name + "'");
}

ArchimedeanData archimedean_data(const OrbitPairing& pairing) {
  const auto& x = pairing.x;
  const auto& y = pairing.y;
  ArchimedeanData a;
  Ball x12 = abs(x[0].value() / x[1].value());
  Ball y12 = abs(y[0].value() / y[1].value());
  a.abs_x31 = abs(x[2].value() / x[0].value());
  a.abs_y31 = abs(y[2].value() / y[0].value());
  const mpfr_prec_t prec = x12.prec();
  Ball one = Ball::from_int(1, prec);
  if (!certainly_less(one, x12) || !certainly_less(one, y12))
    throw InvariantViolation("bounds", "dominance |x1/x2| > 1, |y1/y2| > 1 not certified");
  if (!certainly_less(a.abs_x31, one) || !certainly_less(a.abs_y31, one))
    throw InvariantViolation("bounds", "|x3/x1| < 1, |y3/y1| < 1 not certified");
  // y3 is stored as the exact conjugate of y2, so |y3/y2| = 1 exactly.
  CBall y2bar = conj(y[1].value());
  if (!mpfr_equal_p(y[2].value().re.mid().get(), y2bar.re.mid().get()) ||
      !mpfr_equal_p(y[2].value().im.mid().get(), y2bar.im.mid().get()))
    throw InvariantViolation("bounds", "y3 is not the exact conjugate of y2");
  a.log_x12 = log(x12);
  a.log_y12 = log(y12);
  return a;
}

CaseData build_case(const CaseId& id, const CaseConfig& config) {
  CaseData c;
  c.id = id;
  c.hx = hilbert_class_poly(id.dx, config.precision, config.precision_cap, config.cache_dir);
  c.hy = hilbert_class_poly(id.dy, config.precision, config.precision_cap, config.cache_dir);
  Triple x = label_conjugates(c.hx.poly, config.precision, config.precision_cap);
  Triple y = label_conjugates(c.hy.poly, config.precision, config.precision_cap);
  c.pairing = pair_orbit(x, y, config.precision_cap);
  c.sf = splitting_field_generator(c.pairing);
  c.pattern = find_valuation_pattern(c.sf, config.prime_limit);
  const PrintedValues& pv = printed_values(id);
  c.printed_pattern = pattern_at_prime(c.sf, pv.printed_prime);
  c.beta = conjugate_ratio(c.pairing.x[2], c.pairing.x[1]);
  c.alpha = conjugate_ratio(c.pairing.y[2], c.pairing.y[1]);
  c.arch = archimedean_data(c.pairing);
  c.baker = c1(c.beta);
  return c;
}

MasterInputs master_inputs(const CaseData& c) {
  MasterInputs in;
  in.c1 = c.baker.c1;
  in.p = c.pattern.p;
  in.e = c.pattern.e;
  in.v0 = c.pattern.v0;
  in.arch = c.arch;
  return in;
}

MasterInputs printed_master_inputs(const CaseData& c) {
  MasterInputs in = master_inputs(c);
  const PrintedValues& pv = printed_values(c.id);
  in.c1 = Ball::from_decimal(pv.c1);
  if (c.printed_pattern) {
    in.p = c.printed_pattern->p;
    in.e = c.printed_pattern->e;
    in.v0 = c.printed_pattern->v0;
  }
  return in;
}

Ball exponent_ceiling(const MasterInputs& in, unsigned long n) {
  const mpfr_prec_t prec = in.arch.log_x12.prec();
  Ball ln = log(Ball::from_mpz(mpz_class(n), prec));
  return Ball::from_int(in.e, prec) * ln / Ball::log_const(static_cast<unsigned long>(in.p), prec) +
         Ball::from_int(in.v0, prec);
}

long exponent_ceiling_floor(const MasterInputs& in, unsigned long n) {
  ValuationPattern pat;
  pat.p = in.p;
  pat.e = in.e;
  pat.v0 = in.v0;
  return padic_exponent_floor(n, pat);
}

namespace {

Ball pow_small(const Ball& x, unsigned long n) { return pow(x, n); }

// c1 (log M(n))^2 with c1 at its upper edge.
Ball log_penalty(const MasterInputs& in, unsigned long n) {
  return upper_point(in.c1) * sqr(log(exponent_ceiling(in, n)));
}

}  // namespace

Ball m_free_denominator(const MasterInputs& in, unsigned long n) {
  const mpfr_prec_t prec = in.arch.log_x12.prec();
  return Ball::from_decimal("0.99", prec) * exp(-log_penalty(in, n)) - pow_small(in.arch.abs_y31, n);
}

std::optional<Ball> denominator_lower_bound(const CaseData& c, unsigned long m, unsigned long n) {
  if (m == 0 || n == 0) throw InvalidArgument("bounds", "m and n must be positive");
  Ball v;
  if (m >= kAsymptoticFrom) {
    v = m_free_denominator(master_inputs(c), n);
  } else {
    const auto& x = c.pairing.x;
    const auto& y = c.pairing.y;
    const mpfr_prec_t prec = x[0].prec();
    CBall one = CBall::from_mpz(mpz_class(1), prec);
    v = abs(one - pow(y[2].value() / y[0].value(), n) - pow(x[2].value() / x[1].value(), m));
  }
  Ball lo = lower_point(v);
  if (!lo.is_positive()) return std::nullopt;
  return lo;
}

namespace {

// Least T >= 1 such that pred(n) holds for every n >= T, where pred has the
// form n a - c1 g(n) > k with a = -log|y3/y1| and g(n) = (log M(n))^2. Past a
// point where pred holds and a >= c1 g'(n) with g' decreasing (M(n) >= 3),
// the predicate holds for all larger n.
template <class Pred>
long stable_threshold(const MasterInputs& in, Pred pred) {
  const mpfr_prec_t prec = in.arch.log_x12.prec();
  Ball a = -log(in.arch.abs_y31);
  Ball lp = Ball::log_const(static_cast<unsigned long>(in.p), prec);
  unsigned long n = 16;
  for (;; n *= 2) {
    if (n > 1000000000UL) throw InvariantViolation("bounds", "threshold search exceeded 1e9");
    Ball M = exponent_ceiling(in, n);
    if (!certainly_less(Ball::from_int(3, prec), M)) continue;
    Ball gprime = Ball::from_int(2 * in.e, prec) * log(M) / (Ball::from_mpz(mpz_class(n), prec) * lp * M);
    if (!certainly_less(upper_point(in.c1) * gprime, a)) continue;
    if (pred(n)) break;
  }
  long t = static_cast<long>(n);
  while (t > 1 && pred(static_cast<unsigned long>(t - 1))) --t;
  return t;
}

}  // namespace

MasterResult master_n_bound(const MasterInputs& in) {
  const mpfr_prec_t prec = in.arch.log_x12.prec();
  MasterResult r;
  Ball two = Ball::from_int(2, prec);
  r.K = upper_point((two + pow(in.arch.abs_x31, kAsymptoticFrom)) / Ball::from_decimal("0.98", prec));
  r.K_within_2_05 = certainly_less_equal(r.K, Ball::from_decimal("2.05", prec));

  r.positivity_threshold = stable_threshold(in, [&](unsigned long n) {
    return m_free_denominator(in, n).is_positive();
  });
  r.threshold98 = stable_threshold(in, [&](unsigned long n) {
    Ball main = exp(-log_penalty(in, n));
    Ball slack = Ball::from_decimal("0.01", prec) * main - pow_small(in.arch.abs_y31, n);
    return slack.is_positive();
  });

  // F(n) = n log|y1/y2| - M(n) log|x1/x2| - log K - c1 (log M(n))^2.
  Ball logK = log(r.K);
  auto F = [&](unsigned long n) {
    return Ball::from_mpz(mpz_class(n), prec) * in.arch.log_y12 - exponent_ceiling(in, n) * in.arch.log_x12 -
           logK - log_penalty(in, n);
  };
  // F'(n) = log|y1/y2| - e / (n log p) (log|x1/x2| + 2 c1 log M / M); the
  // subtracted term decreases once M >= 3.
  Ball lp = Ball::log_const(static_cast<unsigned long>(in.p), prec);
  auto increasing_from = [&](unsigned long n) {
    Ball M = exponent_ceiling(in, n);
    if (!certainly_less(Ball::from_int(3, prec), M)) return false;
    Ball sub = Ball::from_int(in.e, prec) / (Ball::from_mpz(mpz_class(n), prec) * lp) *
               (in.arch.log_x12 + two * upper_point(in.c1) * log(M) / M);
    return certainly_less(sub, in.arch.log_y12);
  };
  unsigned long n1 = 1;
  while (!increasing_from(n1)) {
    n1 *= 2;
    if (n1 > 1000000000UL) throw InvariantViolation("bounds", "master inequality never turns increasing below 1e9");
  }
  // Tighten n1 downward to the first point of the increasing regime.
  {
    unsigned long lo = n1 / 2, hi = n1;
    while (hi - lo > 1) {
      unsigned long mid = lo + (hi - lo) / 2;
      if (increasing_from(mid)) hi = mid;
      else lo = mid;
    }
    if (n1 > 1) n1 = hi;
  }
  auto positive = [&](unsigned long n) { return F(n).is_positive(); };
  if (positive(n1)) {
    long n = static_cast<long>(n1) - 1;
    while (n >= 1 && positive(static_cast<unsigned long>(n))) --n;
    r.n_max = n;
  } else {
    unsigned long lo = n1, hi = n1 * 2;
    while (!positive(hi)) {
      lo = hi;
      hi *= 2;
      if (hi > 1000000000UL) throw InvariantViolation("bounds", "master inequality holds up to 1e9");
    }
    while (hi - lo > 1) {
      unsigned long mid = lo + (hi - lo) / 2;
      if (positive(mid)) hi = mid;
      else lo = mid;
    }
    r.n_max = static_cast<long>(lo);
  }
  r.implied_m = r.n_max >= 1 ? exponent_ceiling_floor(in, static_cast<unsigned long>(r.n_max)) : 0;
  r.small_n_m = exponent_ceiling_floor(in, static_cast<unsigned long>(r.threshold98));
  r.contradiction = r.implied_m < static_cast<long>(kAsymptoticFrom) &&
                    r.small_n_m < static_cast<long>(kAsymptoticFrom);
  return r;
}

std::vector<BoundTableRow> c2_table(const CaseData& c, const PrintedValues* printed) {
  std::vector<BoundTableRow> rows;
  const ArchimedeanData& a = c.arch;
  const mpfr_prec_t prec = a.log_x12.prec();
  for (unsigned long m = 1; m < kAsymptoticFrom; ++m) {
    BoundTableRow row;
    row.m = static_cast<long>(m);
    Ball num = Ball::from_int(2, prec) + pow(a.abs_x31, m);
    Ball den = one_minus_power_abs(c.beta, m) - a.abs_y31;
    if (!den.is_positive()) throw PrecisionError("bounds", "|1 - beta^m| - |y3/y1| not certified positive");
    row.c2 = upper_point(num / lower_point(den));
    Ball q = (log(row.c2) + Ball::from_mpz(mpz_class(m), prec) * a.log_x12) / a.log_y12;
    Float hi = q.upper();
    mpz_class fl;
    mpfr_get_z(fl.get_mpz_t(), hi.get(), MPFR_RNDD);
    row.n_max = fl.get_si();
    if (printed) {
      row.matches_printed = row.n_max == printed->table_n[m - 1];
      row.c2_matches_printed = std::fabs(row.c2.to_double() - printed->c2[m - 1]) < 0.005;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ResidualRow> residual_rows(const MasterInputs& in, const std::vector<BoundTableRow>& table) {
  std::vector<ResidualRow> out;
  for (const auto& t : table) {
    ResidualRow r;
    r.m = t.m;
    r.n_max = t.n_max;
    if (t.n_max < 1) {
      r.ceiling = Ball::from_int(0);
      r.kept = false;
    } else {
      r.ceiling = exponent_ceiling(in, static_cast<unsigned long>(t.n_max));
      // Dropped only when m > M(n_max(m)) is certified.
      r.kept = !certainly_less(r.ceiling, Ball::from_int(t.m, r.ceiling.prec()));
    }
    out.push_back(r);
  }
  return out;
}

std::vector<std::pair<long, long>> residual_set(const std::vector<ResidualRow>& rows) {
  std::vector<std::pair<long, long>> out;
  for (const auto& r : rows)
    if (r.kept)
      for (long n = 1; n <= r.n_max; ++n) out.emplace_back(r.m, n);
  return out;
}

}  // namespace singmod
