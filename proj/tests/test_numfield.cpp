#include <doctest.h>

#include "errors.hpp"
#include "numfield.hpp"
#include "quadforms.hpp"

using namespace singmod;

namespace {

ZPoly zp(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(v);
}

CBall near(double lo, double hi) {
  Float a(64), b(64);
  mpfr_set_d(a.get(), lo, MPFR_RNDN);
  mpfr_set_d(b.get(), hi, MPFR_RNDN);
  return CBall::from_real(Ball::from_endpoints(a.get(), b.get(), 256));
}

Triple triple(long d) { return label_conjugates(hilbert_class_poly(d).poly); }

}  // namespace

TEST_CASE("root isolation") {
  auto r = isolate_roots(zp({1, 0, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].im.contains(mpz_class(1)));
  CHECK(r[1].im.contains(mpz_class(-1)));
  auto c = isolate_roots(zp({-2, 0, 0, 1}));
  REQUIRE(c.size() == 3);
  CHECK(c[0].im.is_exact());
  CHECK(pow(c[0].re, 3).contains(mpz_class(2)));
  auto z = isolate_roots(zp({0, -1, 0, 1}));  // X^3 - X
  REQUIRE(z.size() == 3);
  CHECK(z[0].re.contains(mpz_class(1)));
  CHECK(z[1].re.contains(mpz_class(0)));
  CHECK(z[2].re.contains(mpz_class(-1)));
  CHECK_THROWS_AS(isolate_roots(zp({1, 2, 1})), InvalidArgument);
}

TEST_CASE("factorization by root subsets") {
  ZPoly f = zp({-2, 0, 1}) * zp({1, 1, 1}) * zp({-3, 1});
  auto facs = factor_with_roots(f, isolate_roots(f));
  REQUIRE(facs.size() == 3);
  ZPoly prod = zp({1});
  for (const auto& fc : facs) prod = prod * fc.poly;
  CHECK(prod == f);
  auto single = factor_with_roots(zp({-2, 0, 0, 1}), isolate_roots(zp({-2, 0, 0, 1})));
  CHECK(single.size() == 1);
}

TEST_CASE("heights of rationals") {
  CHECK(height(algebraic_from_rational(1)).contains(mpz_class(0)));
  Ball h2 = height(algebraic_from_rational(2));
  CHECK(h2.overlaps(Ball::log_const(2)));
  Ball hq = height(algebraic_from_rational(mpq_class(2, 3)));
  CHECK(hq.overlaps(Ball::log_const(3)));
}

TEST_CASE("height of a singular modulus against j-value balls") {
  auto h = hilbert_class_poly(-23);
  Ball direct = Ball::from_int(0);
  for (const auto& f : h.forms) direct = direct + log(max_with_one(abs(eval_j(f))));
  direct = direct / Ball::from_int(3);
  auto x = triple(-23);
  CHECK(height(x[0]).overlaps(direct));
}

TEST_CASE("conjugate labelling") {
  auto x = triple(-23);
  CHECK(x[0].value().im.is_exact());
  CHECK(x[0].value().re.is_negative());
  CHECK(x[0].value().re.to_double() == doctest::Approx(-3493225.7).epsilon(1e-7));
  CHECK(x[1].value().im.is_positive());
  CHECK(abs(x[1].value()).overlaps(abs(x[2].value())));
  for (long d : {-92L, -31L, -124L}) {
    auto t = triple(d);
    CHECK(certainly_less(abs(t[1].value()), abs(t[0].value())));
  }
  CHECK(triple(-92)[0].value().re.is_positive());
  CHECK_THROWS_AS(label_conjugates(zp({0, -1, 0, 1})), InvariantViolation);
}

TEST_CASE("orbit pairing") {
  auto x = triple(-92);
  auto y = triple(-23);
  OrbitPairing op = pair_orbit(x, y);
  CHECK(op.relator.degree() <= 2);
  CHECK(relator_identity_holds(x[0].minpoly, y[0].minpoly, op.relator));
  CHECK(op.y[0].value().im.is_exact());
  for (int i = 0; i < 3; ++i) CHECK(op.relator.eval(op.x[i].value()).overlaps(op.y[i].value()));
  CBall p2 = op.relator.eval(op.x[1].value());
  CBall p3 = op.relator.eval(op.x[2].value());
  CHECK(p2.overlaps(conj(p3)));
  // A perturbed relator fails the exact identity.
  QPoly bad = op.relator + QPoly::constant(mpq_class(1, 1000000007));
  CHECK_FALSE(relator_identity_holds(x[0].minpoly, y[0].minpoly, bad));
  auto x2 = triple(-124);
  auto y2 = triple(-31);
  OrbitPairing op2 = pair_orbit(x2, y2);
  CHECK(relator_identity_holds(x2[0].minpoly, y2[0].minpoly, op2.relator));
}

TEST_CASE("ratios of conjugates") {
  auto x = triple(-92);
  AlgebraicNumber beta = conjugate_ratio(x[2], x[1]);
  CHECK(beta.degree() == 6);
  CHECK(beta.minpoly.lead() == mpz_class("477743554659559173623"));
  CHECK(abs(beta.value()).contains(mpz_class(1)));
  CHECK_FALSE(is_root_of_unity(beta));
  // Route two: symmetric functions of the embeddings.
  CHECK(conjugate_ratio_poly_numeric(x[0]) == beta.minpoly);
  AlgebraicNumber one = conjugate_ratio(x[1], x[1]);
  CHECK(one.minpoly == zp({-1, 1}));
  auto y = triple(-23);
  AlgebraicNumber alpha = conjugate_ratio(y[2], y[1]);
  CHECK(abs(alpha.value()).contains(mpz_class(1)));
  CHECK_FALSE(is_root_of_unity(alpha));
  CHECK(conjugate_ratio_poly_numeric(y[0]) == alpha.minpoly);
}

TEST_CASE("roots of unity") {
  CHECK(is_root_of_unity(algebraic_from_rational(-1)));
  CHECK(is_root_of_unity(algebraic_from_poly(zp({1, 0, 1}), CBall(Ball::from_int(0), Ball::from_int(1)))));
  CHECK(is_root_of_unity(algebraic_from_poly(zp({1, 1, 1, 1, 1}), exp_i(Ball::pi() * Ball::from_mpq(mpq_class(2, 5))))));
  CHECK_FALSE(is_root_of_unity(algebraic_from_rational(2)));
}

TEST_CASE("degree of powers") {
  auto x = triple(-23);
  CHECK(degree_of_power(x[0], 1) == 3);
  CHECK(degree_of_power(x[0], 2) == 3);
  CHECK(degree_of_power(triple(-92)[0], 5) == 3);
  AlgebraicNumber s2 = algebraic_from_poly(zp({-2, 0, 1}), near(1.41, 1.42));
  CHECK(degree_of_power(s2, 2) == 1);
}

TEST_CASE("products and inverses") {
  AlgebraicNumber s2 = algebraic_from_poly(zp({-2, 0, 1}), near(1.41, 1.42));
  AlgebraicNumber s3 = algebraic_from_poly(zp({-3, 0, 1}), near(1.73, 1.74));
  AlgebraicNumber s6 = product(s2, s3);
  CHECK(s6.minpoly == zp({-6, 0, 1}));
  AlgebraicNumber inv = inverse(s2);
  CHECK(inv.minpoly == zp({-1, 0, 2}));
  CHECK(height(inv).overlaps(height(s2)));
}
