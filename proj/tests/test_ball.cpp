#include <doctest.h>

#include "ball.hpp"
#include "errors.hpp"

using namespace singmod;

TEST_CASE("decimal literals are exact rationals") {
  Ball b = Ball::from_decimal("4973.14");
  CHECK(b.contains(mpq_class(497314, 100)));
  CHECK_FALSE(b.contains(mpq_class(497315, 100)));
  Ball n = Ball::from_decimal("-0.96");
  CHECK(n.is_negative());
  CHECK_THROWS_AS(Ball::from_decimal("1.2.3"), InvalidArgument);
}

TEST_CASE("arithmetic encloses exact rational results") {
  mpq_class a(1, 3);
  mpq_class b(-7, 11);
  Ball x = Ball::from_mpq(a);
  Ball y = Ball::from_mpq(b);
  CHECK((x + y).contains(mpq_class(a + b)));
  CHECK((x - y).contains(mpq_class(a - b)));
  CHECK((x * y).contains(mpq_class(a * b)));
  CHECK((x / y).contains(mpq_class(a / b)));
  CHECK(sqr(y).contains(mpq_class(b * b)));
  CHECK(pow(y, 7).contains(mpq_class(b * b * b * b * b * b * b)));
}

TEST_CASE("wide balls propagate radius") {
  Float lo(64), hi(64);
  mpfr_set_d(lo.get(), -0.5, MPFR_RNDN);
  mpfr_set_d(hi.get(), 2.0, MPFR_RNDN);
  Ball w = Ball::from_endpoints(lo.get(), hi.get(), 64);
  Ball s = sqr(w);
  CHECK(s.contains(mpz_class(0)));
  CHECK(s.contains(mpz_class(4)));
  CHECK(s.contains(mpq_class(1, 4)));
  CHECK_THROWS_AS(Ball::from_int(1) / w, PrecisionError);
  CHECK_THROWS_AS(log(w), PrecisionError);
}

TEST_CASE("transcendental constants") {
  Ball pi = Ball::pi(200);
  Ball c = cos(pi);
  CHECK(c.contains(mpz_class(-1)));
  Ball e = exp(log(Ball::from_int(13)));
  CHECK(e.contains(mpz_class(13)));
  CHECK(sqrt(Ball::from_int(49)).contains(mpz_class(7)));
  CHECK(Ball::log_const(13).overlaps(log(Ball::from_int(13))));
}

TEST_CASE("integer extraction") {
  Ball b = Ball::from_mpq(mpq_class(1000001, 1000));
  CHECK(b.certified_floor() == 1000);
  CHECK_FALSE(b.unique_integer().has_value());
  Ball i = Ball::from_int(-12345);
  REQUIRE(i.unique_integer().has_value());
  CHECK(*i.unique_integer() == -12345);
}

TEST_CASE("complex balls") {
  CBall z(Ball::from_int(3), Ball::from_int(4));
  CHECK(abs(z).contains(mpz_class(5)));
  CBall w = z * conj(z);
  CHECK(w.re.contains(mpz_class(25)));
  CHECK(w.im.contains(mpz_class(0)));
  CBall q = z / z;
  CHECK(q.re.contains(mpz_class(1)));
  CHECK(q.im.contains(mpz_class(0)));
  CBall p = pow(CBall(Ball::from_int(0), Ball::from_int(1)), 4);
  CHECK(p.re.contains(mpz_class(1)));
  CBall u = exp_i(Ball::pi());
  CHECK(u.re.contains(mpz_class(-1)));
}

TEST_CASE("certified comparisons") {
  Ball a = Ball::from_int(1);
  Ball b = Ball::from_mpq(mpq_class(3, 2));
  CHECK(certainly_less(a, b));
  CHECK_FALSE(certainly_less(b, a));
  CHECK(max_with_one(Ball::from_mpq(mpq_class(1, 2))).contains(mpz_class(1)));
  CHECK(scale_2exp(a, 3).contains(mpz_class(8)));
}
