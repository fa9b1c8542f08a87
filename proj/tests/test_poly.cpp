#include <doctest.h>

#include "errors.hpp"
#include "poly.hpp"

using namespace singmod;

namespace {
ZPoly zp(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(v);
}
}  // namespace

TEST_CASE("basic arithmetic and division") {
  ZPoly a = zp({-1, 0, 1});  // X^2 - 1
  ZPoly b = zp({1, 1});
  auto q = exact_quotient(a, b);
  REQUIRE(q);
  CHECK(*q == zp({-1, 1}));
  CHECK_FALSE(exact_quotient(a, zp({1, 2})).has_value());
  CHECK((a * b).degree() == 3);
  CHECK(a.eval(mpz_class(5)) == 24);
}

TEST_CASE("gcd and squarefree part") {
  ZPoly f = zp({-1, 1}) * zp({-1, 1}) * zp({2, 0, 1});
  ZPoly s = squarefree_part(f);
  CHECK(s == zp({-1, 1}) * zp({2, 0, 1}));
  QPoly g = gcd(QPoly(f), QPoly(zp({-1, 1}) * zp({5, 1})));
  CHECK(g == QPoly(zp({-1, 1})));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == zp({-1, 1}));
  CHECK(cyclotomic(4) == zp({1, 0, 1}));
  CHECK(cyclotomic(6) == zp({1, -1, 1}));
  CHECK(cyclotomic(12) == zp({1, 0, -1, 0, 1}));
  for (unsigned k = 1; k <= 30; ++k) CHECK(cyclotomic(k).degree() == static_cast<int>(euler_phi(k)));
}

TEST_CASE("resultant matches root products") {
  // Res(X^2 - 2, X - 3) = 3^2 - 2 = 7 with this sign convention.
  CHECK(resultant(zp({-2, 0, 1}), zp({-3, 1})) == 7);
  CHECK(discriminant(zp({-2, 0, 1})) == 8);
  CHECK(discriminant(zp({1, 1, 0, 1})) == -31);  // X^3 + X + 1
  CHECK(determinant({{2, 0}, {0, 3}}) == 6);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("elimination gives the minimal polynomial of a sum") {
  // sqrt2 + sqrt3: Res_s(s^2 - 2, (t - s)^2 - 3)
  BiPoly a{{zp({-2}), ZPoly(), zp({1})}};
  BiPoly b{{zp({-3, 0, 1}), zp({0, -2}), zp({1})}};
  ZPoly r = eliminate(a, b);
  CHECK(r.primitive() == zp({1, 0, -10, 0, 1}));
}

TEST_CASE("interpolation") {
  std::vector<mpq_class> xs{0, 1, 2, 3};
  std::vector<mpq_class> ys;
  for (auto& x : xs) ys.push_back(x * x * x - 2 * x + 5);
  QPoly p = interpolate(xs, ys);
  CHECK(p == QPoly(zp({5, -2, 0, 1})));
}

TEST_CASE("rational reconstruction") {
  auto r = simplest_rational(mpq_class(333, 1000), mpq_class(334, 1000), 1000);
  REQUIRE(r);
  CHECK(*r == mpq_class(1, 3));
  Ball b = Ball::from_mpq(mpq_class(-4115, 226), 256);
  auto q = reconstruct_rational(b);
  REQUIRE(q);
  CHECK(*q == mpq_class(-4115, 226));
  CHECK(*simplest_rational(mpq_class(-1, 2), mpq_class(1, 3), 10) == 0);
}
