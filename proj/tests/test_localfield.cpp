#include <doctest.h>

#include "errors.hpp"
#include "localfield.hpp"

using namespace singmod;

namespace {

ZPoly zp(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(v);
}

}  // namespace

TEST_CASE("p-adic valuations of rationals") {
  CHECK(vp(mpz_class(96), 2) == 5);
  CHECK(vp(mpq_class(50, 3), 5) == 2);
  CHECK(vp(mpq_class(7, 250), 5) == -3);
}

TEST_CASE("unramified arithmetic") {
  LocalField k(7, 1, 2, 0, 20);
  auto a = k.from_int(3);
  auto b = k.from_int(5);
  auto w = k.lift(FiniteField::Elem{0, 1});
  auto x = k.add(a, k.mul(b, w));
  auto y = k.inv_unit(x);
  CHECK(k.is_zero_to_precision(k.sub(k.mul(x, y), k.one())));
  CHECK(k.val(k.from_int(49 * 3)) == 2);
  CHECK(k.trace(k.one()) == 2);
  auto q = k.from_rational(mpq_class(1, 3));
  CHECK(k.is_zero_to_precision(k.sub(k.mul(q, a), k.one())));
}

TEST_CASE("ramified arithmetic") {
  LocalField k(5, 2, 1, 0, 30);
  auto pi = k.uniformizer();
  CHECK(k.val(pi) == 1);
  auto pi2 = k.mul(pi, pi);
  CHECK(k.val(pi2) == 2);
  // pi^2 = 5 c with c = 1 for c_index 0.
  CHECK(k.is_zero_to_precision(k.sub(pi2, k.from_int(5))));
  auto back = k.div_pi(pi2, 1);
  CHECK(k.is_zero_to_precision(k.sub(back, pi)));
  auto cp = k.charpoly(pi);
  REQUIRE(cp.size() == 3);
  CHECK(cp[1] == 0);
  CHECK(cp[2] == 1);
  long digits = 0;
  k.charpoly(pi, &digits);
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), 5, digits);
  CHECK(cp[0] == pd - 5);
  auto z = k.add(k.from_int(2), pi);
  auto zi = k.div(k.one(), z);
  CHECK(k.is_zero_to_precision(k.sub(k.mul(z, zi), k.one())));
}

TEST_CASE("roots and splitting fields") {
  // X^2 - 2 over Q_7 splits in Q_7.
  auto f1 = zp({-2, 0, 1});
  auto k1 = splitting_field(f1, 7, 30);
  REQUIRE(k1);
  CHECK(k1->degree() == 1);
  for (const auto& r : integral_roots(*k1, to_local(*k1, f1)))
    CHECK(k1->is_zero_to_precision(eval(*k1, to_local(*k1, f1), r)));
  // X^2 - 3 over Q_7 needs the unramified quadratic extension.
  auto k2 = splitting_field(zp({-3, 0, 1}), 7, 30);
  REQUIRE(k2);
  CHECK(k2->e() == 1);
  CHECK(k2->f() == 2);
  // X^2 - 7 is ramified.
  auto k3 = splitting_field(zp({-7, 0, 1}), 7, 30);
  REQUIRE(k3);
  CHECK(k3->e() == 2);
  CHECK(k3->f() == 1);
  // Repeated residue root: (X - 1)(X - 1 - 49) over Q_7.
  auto f4 = zp({50, -51, 1});
  auto k4 = splitting_field(f4, 7, 30);
  REQUIRE(k4);
  auto r4 = integral_roots(*k4, to_local(*k4, f4));
  REQUIRE(r4.size() == 2);
  CHECK(k4->val(k4->sub(r4[0], r4[1])) == 2);
  // X^3 - 7 over Q_7 is totally ramified of degree 3 (F_7 has cube roots
  // of unity); over Q_11 the cube roots of unity also need f = 2.
  auto k5 = splitting_field(zp({-7, 0, 0, 1}), 7, 40);
  REQUIRE(k5);
  CHECK(k5->e() == 3);
  CHECK(k5->f() == 1);
  auto k6 = splitting_field(zp({-11, 0, 0, 1}), 11, 40);
  REQUIRE(k6);
  CHECK(k6->e() == 3);
  CHECK(k6->f() == 2);
}
