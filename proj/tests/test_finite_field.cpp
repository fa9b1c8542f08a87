#include <doctest.h>

#include "finite_field.hpp"

using namespace singmod;

TEST_CASE("first irreducible polynomials") {
  CHECK(first_irreducible(5, 1) == FpPoly{0, 1});
  // X^2 + 2 is the first monic irreducible quadratic over F_5.
  CHECK(first_irreducible(5, 2) == FpPoly{2, 0, 1});
  CHECK(fp_is_irreducible(FpPoly{1, 1, 0, 1}, 2));
  CHECK_FALSE(fp_is_irreducible(FpPoly{1, 0, 1}, 2));
}

TEST_CASE("field arithmetic and generators") {
  for (auto [p, f] : std::vector<std::pair<long, int>>{{7, 1}, {11, 2}, {13, 3}, {2, 4}}) {
    FiniteField k(p, f);
    auto g = k.generator();
    CHECK(k.order_of(g) == k.order() - 1);
    for (unsigned long long i = 1; i < std::min<unsigned long long>(k.order(), 60); ++i) {
      auto a = k.element(i);
      CHECK(k.index_of(a) == i);
      CHECK(k.mul(a, k.inv(a)) == k.one());
      CHECK(k.is_zero(k.sub(k.pow(a, k.order()), a)));
    }
  }
}

TEST_CASE("roots with multiplicities") {
  FiniteField k(7, 1);
  // (X - 1)^2 (X - 3) (X^2 + 1) over F_7; X^2 + 1 has no roots.
  FiniteField::Poly a = {k.from_int(1)};
  auto lin = [&](long r) { return FiniteField::Poly{k.from_int(-r), k.one()}; };
  a = k.poly_mul(a, lin(1));
  a = k.poly_mul(a, lin(1));
  a = k.poly_mul(a, lin(3));
  a = k.poly_mul(a, FiniteField::Poly{k.one(), k.zero(), k.one()});
  auto r = k.roots(a);
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == k.from_int(1));
  CHECK(r[0].multiplicity == 2);
  CHECK(r[1].value == k.from_int(3));
  CHECK(r[1].multiplicity == 1);

  FiniteField k2(7, 2);
  auto r2 = k2.roots(FiniteField::Poly{k2.one(), k2.zero(), k2.one()});
  CHECK(r2.size() == 2);
  for (const auto& x : r2) CHECK(k2.is_zero(k2.add(k2.mul(x.value, x.value), k2.one())));
}
