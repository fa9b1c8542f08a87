#include "oracles.hpp"

#include <random>

#include "errors.hpp"
#include "finale.hpp"
#include "parallel.hpp"

namespace singmod {

std::string OracleReport::summary() const {
  return name + ": " + std::to_string(passed) + "/" + std::to_string(total) + (ok() ? " matches" : " FAILED");
}

namespace {

void scan_pattern(const ValuationPattern& pat, unsigned long max_m, OracleReport& rep) {
  long hits = 0;
  for (unsigned long m = 1; m <= max_m; ++m) {
    long prop = prop_valuation(m, pat);
    long direct = direct_valuation(m, pat);
    if (prop == direct) {
      ++hits;
    } else {
      rep.failures.push_back("p=" + std::to_string(pat.p) + " m=" + std::to_string(m) + ": formula " +
                             std::to_string(prop) + ", direct " + std::to_string(direct));
    }
  }
  rep.passed += hits;
  rep.total += static_cast<long>(max_m);
  rep.lines.push_back("p=" + std::to_string(pat.p) + " (e=" + std::to_string(pat.e) + ", m0=" +
                      std::to_string(pat.m0) + ", v0=" + std::to_string(pat.v0) + "): " + std::to_string(hits) +
                      "/" + std::to_string(max_m) + " matches");
}

}  // namespace

OracleReport valuation_scan_oracle(const CaseData& c, unsigned long max_m) {
  OracleReport rep;
  rep.name = "valuation-scan case " + c.id.name;
  scan_pattern(c.pattern, max_m, rep);
  if (c.printed_pattern && c.printed_pattern->p != c.pattern.p) scan_pattern(*c.printed_pattern, max_m, rep);
  return rep;
}

OracleReport table_sample_oracle(const CaseData& c, unsigned samples, std::uint64_t seed) {
  OracleReport rep;
  rep.name = "table-sample case " + c.id.name;
  std::vector<BoundTableRow> table = c2_table(c);
  std::mt19937_64 rng(seed);
  const mpfr_prec_t prec = c.arch.log_x12.prec();
  for (unsigned s = 0; s < samples; ++s) {
    const BoundTableRow& row = table[std::uniform_int_distribution<std::size_t>(0, table.size() - 1)(rng)];
    long n = std::uniform_int_distribution<long>(1, row.n_max + 50)(rng);
    Ball lhs = Ball::from_int(n, prec) * c.arch.log_y12;
    Ball rhs = log(row.c2) + Ball::from_int(row.m, prec) * c.arch.log_x12;
    bool violated = certainly_less(rhs, lhs);
    bool expected = n > row.n_max;
    ++rep.total;
    if (violated == expected) {
      ++rep.passed;
    } else {
      rep.failures.push_back("m=" + std::to_string(row.m) + " n=" + std::to_string(n) + " n_max=" +
                             std::to_string(row.n_max));
    }
  }
  rep.lines.push_back(std::to_string(rep.passed) + "/" + std::to_string(rep.total) + " samples consistent");
  return rep;
}

OracleReport ball_vs_exact_oracle(const CaseData& c, const std::vector<std::pair<long, long>>& pairs,
                                  unsigned jobs) {
  OracleReport rep;
  rep.name = "ball-vs-exact case " + c.id.name;
  std::vector<NonvanishingCheck> checks(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) { checks[i] = check_pair(c, pairs[i].first, pairs[i].second); });
  for (const auto& chk : checks) {
    ++rep.total;
    if (chk.routes_agree && chk.ball.certified_nonzero && chk.norm_nonzero) {
      ++rep.passed;
    } else {
      rep.failures.push_back("(m,n)=(" + std::to_string(chk.m) + "," + std::to_string(chk.n) +
                             "): ball nonzero " + (chk.ball.certified_nonzero ? "yes" : "no") + ", norm " +
                             chk.norm.get_str() + ", agree " + (chk.routes_agree ? "yes" : "no"));
    }
  }
  rep.lines.push_back(std::to_string(rep.passed) + "/" + std::to_string(rep.total) + " residual pairs agree");
  return rep;
}

namespace {

// Random algebraic number of degree 2 or 3 with small coefficients.
AlgebraicNumber random_algebraic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(2, 3);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<long> lead(1, 4);
  for (;;) {
    int d = deg(rng);
    std::vector<mpz_class> c(d + 1);
    for (int i = 0; i < d; ++i) c[i] = coef(rng);
    c[d] = lead(rng);
    if (c[0] == 0) continue;
    ZPoly f(c);
    if (squarefree_part(f).degree() != d) continue;
    std::vector<CBall> roots = isolate_roots(f);
    std::vector<Factor> facs = factor_with_roots(f, roots);
    if (facs.size() != 1) continue;
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng);
    AlgebraicNumber a;
    a.minpoly = facs[0].poly;
    a.roots = roots;
    a.index = k;
    if (a.minpoly != f.primitive()) continue;
    return a;
  }
}

bool not_above(const Ball& a, const Ball& b) { return !certainly_less(b, a); }

}  // namespace

OracleReport height_laws_oracle(unsigned trials, std::uint64_t seed) {
  OracleReport rep;
  rep.name = "height-laws";
  std::mt19937_64 rng(seed);
  long power_ok = 0, inverse_ok = 0, sub_ok = 0;
  for (unsigned t = 0; t < trials; ++t) {
    AlgebraicNumber a = random_algebraic(rng);
    AlgebraicNumber b = random_algebraic(rng);
    unsigned n = std::uniform_int_distribution<unsigned>(2, 3)(rng);
    Ball ha = height(a);
    Ball hb = height(b);
    bool p_ok = height(power(a, n)).overlaps(Ball::from_int(n) * ha);
    bool i_ok = height(inverse(a)).overlaps(ha);
    bool s_ok = not_above(height(product(a, b)), ha + hb);
    power_ok += p_ok;
    inverse_ok += i_ok;
    sub_ok += s_ok;
    ++rep.total;
    if (p_ok && i_ok && s_ok) {
      ++rep.passed;
    } else {
      rep.failures.push_back("trial " + std::to_string(t) + ": a root of " + a.minpoly.to_string() +
                             " (conjugate " + std::to_string(a.index) + "), b root of " + b.minpoly.to_string() +
                             ", n=" + std::to_string(n));
    }
  }
  auto line = [&](const char* law, long k) {
    rep.lines.push_back(std::string(law) + ": " + std::to_string(k) + "/" + std::to_string(trials));
  };
  line("h(a^n) = n h(a)", power_ok);
  line("h(1/a) = h(a)", inverse_ok);
  line("h(ab) <= h(a) + h(b)", sub_ok);
  return rep;
}

OracleReport lower_bound_oracle(const CaseData& c, unsigned long max_m) {
  OracleReport rep;
  rep.name = "lower-bound case " + c.id.name;
  for (unsigned long m = 1; m <= max_m; ++m) {
    LowerBoundResult r = lower_bound(c.beta, c.baker, m);
    Ball direct = one_minus_power_abs(c.beta, m);
    ++rep.total;
    if (certainly_less_equal(r.bound, upper_point(direct))) {
      ++rep.passed;
    } else {
      rep.failures.push_back("m=" + std::to_string(m));
    }
  }
  rep.lines.push_back(std::to_string(rep.passed) + "/" + std::to_string(rep.total) + " exponents");
  return rep;
}

OracleReport place_degree_oracle(const CaseData& c, long prime_limit) {
  OracleReport rep;
  rep.name = "place-degrees case " + c.id.name;
  for (long p = 8; p <= prime_limit; ++p) {
    if (!is_prime(p)) continue;
    PlaceSet ps = places_above(c.sf, p);
    int sum = 0;
    for (const auto& pl : ps.places) sum += pl.e * pl.f;
    ++rep.total;
    if (sum == 6) {
      ++rep.passed;
    } else {
      rep.failures.push_back("p=" + std::to_string(p) + ": sum e f = " + std::to_string(sum));
    }
  }
  rep.lines.push_back(std::to_string(rep.passed) + "/" + std::to_string(rep.total) + " primes with sum e f = 6");
  return rep;
}

}  // namespace singmod
