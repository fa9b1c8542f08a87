#include <doctest.h>

#include <map>

#include "errors.hpp"
#include "places.hpp"
#include "quadforms.hpp"

using namespace singmod;

namespace {

struct Case {
  OrbitPairing pairing;
  SplittingField sf;
};

const Case& case_data(long dx, long dy) {
  static std::map<long, Case> cache;
  auto it = cache.find(dx);
  if (it == cache.end()) {
    Case c;
    c.pairing = pair_orbit(label_conjugates(hilbert_class_poly(dx).poly),
                           label_conjugates(hilbert_class_poly(dy).poly));
    c.sf = splitting_field_generator(c.pairing);
    it = cache.emplace(dx, std::move(c)).first;
  }
  return it->second;
}

const Case& case1() { return case_data(-92, -23); }
const Case& case2() { return case_data(-124, -31); }

}  // namespace

TEST_CASE("splitting field generator") {
  for (const Case* c : {&case1(), &case2()}) {
    const auto& sf = c->sf;
    CHECK(sf.minpoly.degree() == 6);
    CHECK(sf.minpoly.lead() == 1);
    QPoly m(sf.minpoly);
    for (int i = 0; i < 3; ++i) {
      CHECK((compose(QPoly(c->pairing.x[0].minpoly), sf.x[i]) % m).is_zero());
      CHECK((compose(QPoly(c->pairing.y[0].minpoly), sf.y[i]) % m).is_zero());
      CHECK(sf.x[i].eval(sf.roots[sf.index]).overlaps(c->pairing.x[i].value()));
    }
    // theta = x1 + c x2 holds exactly.
    CHECK((sf.x[0] + sf.x[1] * mpq_class(sf.c)) % m == QPoly::x());
  }
}

TEST_CASE("field inverse") {
  QPoly m(ZPoly(std::vector<mpz_class>{-2, 0, 0, 1}));
  QPoly a(ZPoly(std::vector<mpz_class>{1, 1}));
  CHECK(mulmod(a, field_inverse(a, m), m) == QPoly::constant(1));
}

TEST_CASE("sum of e f over places") {
  for (const Case* c : {&case1(), &case2()}) {
    for (long p = 11; p <= 200; ++p) {
      if (!is_prime(p)) continue;
      CAPTURE(p);
      PlaceSet ps = places_above(c->sf, p);
      int total = 0;
      for (const auto& pl : ps.places) {
        total += pl.e * pl.f;
        CHECK(pl.e * pl.f == ps.field->degree());
      }
      CHECK(total == 6);
    }
  }
}

TEST_CASE("two routes to the conjugate valuations agree") {
  for (const Case* c : {&case1(), &case2()}) {
    for (long p : {11L, 13L, 23L, 31L, 47L, 53L, 59L, 67L, 101L}) {
      CAPTURE(p);
      PlaceSet ps = places_above(c->sf, p);
      auto direct = conjugate_valuations_direct(c->pairing, c->sf, ps);
      REQUIRE(direct.size() == ps.places.size());
      for (std::size_t i = 0; i < ps.places.size(); ++i)
        CHECK(direct[i] == conjugate_valuations(c->sf, ps.places[i]));
    }
  }
}

TEST_CASE("places above 23 and 11") {
  PlaceSet p23 = places_above(case1().sf, 23);
  bool ramified = false;
  for (const auto& pl : p23.places) ramified = ramified || pl.e == 2;
  CHECK(ramified);
  PlaceSet p11 = places_above(case2().sf, 11);
  CHECK(p11.places.front().e == 1);
}

TEST_CASE("first valuation pattern case 1") {
  // H_-92 = X^2 (X - 1) and H_-23 = X (X - 1)^2 mod 11, so 11 already
  // carries the pattern.
  ValuationPattern pat = find_valuation_pattern(case1().sf);
  CHECK(pat.p == 11);
  CHECK(pat.e == 1);
  CHECK(is_pipeline_pattern(pat.valuations));
}

TEST_CASE("valuation pattern case 1 at 23") {
  auto found = pattern_at_prime(case1().sf, 23);
  REQUIRE(found);
  const ValuationPattern& pat = *found;
  CHECK(pat.p == 23);
  CHECK(pat.e == 2);
  CHECK(pat.m0 == 1);
  CHECK(pat.v0 == 1);
  CHECK(is_pipeline_pattern(pat.valuations));
  CHECK(prop_valuation(23, pat) == 3);
  CHECK(direct_valuation(23, pat) == 3);
  CHECK(padic_exponent_bound(23, pat).contains(mpz_class(3)));
  CHECK(padic_exponent_bound(1, pat).contains(mpz_class(1)));
  CHECK(padic_exponent_floor(23, pat) == 3);
  CHECK(padic_exponent_floor(2092, pat) == 5);
}

TEST_CASE("valuation pattern case 2") {
  ValuationPattern pat = find_valuation_pattern(case2().sf);
  CHECK(pat.p == 11);
  CHECK(pat.e == 1);
  CHECK(pat.v0 == 2);
  CHECK(is_pipeline_pattern(pat.valuations));
  CHECK(padic_exponent_bound(11, pat).contains(mpz_class(3)));
}

TEST_CASE("proposition against repeated multiplication") {
  for (const Case* c : {&case1(), &case2()}) {
    for (long p : {11L, 23L}) {
      auto found = pattern_at_prime(c->sf, p);
      if (!found) continue;
      const ValuationPattern& pat = *found;
      CAPTURE(p);
      CHECK((pat.field->residue_field().order() - 1) % pat.m0 == 0);
      for (unsigned long long m = 1; m <= 200; ++m) {
        CAPTURE(m);
        CHECK(prop_valuation(m, pat) == direct_valuation(m, pat));
      }
      Ball prev = padic_exponent_bound(1, pat);
      for (unsigned long long n = 2; n <= 300; ++n) {
        Ball cur = padic_exponent_bound(n, pat);
        CHECK_FALSE(certainly_less(cur, prev));
        prev = cur;
      }
    }
  }
}

TEST_CASE("proposition preconditions") {
  ValuationPattern pat;
  pat.p = 7;
  pat.m0 = 1;
  CHECK_THROWS_AS(prop_valuation(3, pat), InvalidArgument);
}
