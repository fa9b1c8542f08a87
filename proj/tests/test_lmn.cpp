#include <doctest.h>

#include <cmath>
#include <map>

#include "errors.hpp"
#include "lmn.hpp"
#include "quadforms.hpp"

using namespace singmod;

namespace {

// beta = x3 / x2 for the x-side modulus of each case.
const AlgebraicNumber& beta(long d) {
  static std::map<long, AlgebraicNumber> cache;
  auto it = cache.find(d);
  if (it == cache.end()) {
    Triple x = label_conjugates(hilbert_class_poly(d).poly);
    it = cache.emplace(d, conjugate_ratio(x[2], x[1])).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("c1 prime") {
  // 3 + 1.61 / log 13, 1 + 3.53 / log 13 and the clamped case.
  CHECK(std::abs(c1_prime(6).to_double() - (3 + 1.61 / std::log(13.0))) < 1e-12);
  CHECK(std::abs(c1_prime(2).to_double() - (1 + 3.53 / std::log(13.0))) < 1e-12);
  CHECK(c1_prime(12).contains(mpz_class(6)));
  CHECK(c1_prime(12).is_exact());
  CHECK_THROWS_AS(c1_prime(1), InvalidArgument);
}

TEST_CASE("c1 is monotone in the height") {
  Ball prev = c1_formula(6, Ball::from_int(0));
  for (int k = 1; k <= 40; ++k) {
    Ball cur = c1_formula(6, Ball::from_mpq(mpq_class(k, 2)));
    CHECK(certainly_less(prev, cur));
    prev = cur;
  }
}

TEST_CASE("unit circle and root of unity checks") {
  CHECK(on_unit_circle(beta(-92)));
  CHECK(on_unit_circle(beta(-124)));
  Triple x = label_conjugates(hilbert_class_poly(-92).poly);
  CHECK_FALSE(on_unit_circle(conjugate_ratio(x[0], x[1])));
  CHECK_THROWS_AS(c1(conjugate_ratio(x[0], x[1])), InvalidArgument);
  // i is on the unit circle but a root of unity.
  auto i = algebraic_from_poly(ZPoly(std::vector<mpz_class>{1, 0, 1}),
                               CBall(Ball::from_int(0), Ball::from_int(1)));
  CHECK(on_unit_circle(i));
  CHECK_THROWS_AS(c1(i), InvalidArgument);
}

TEST_CASE("baker constants of beta") {
  // The sound values; the printed 4973.14 and 4820.16 are not reproduced.
  BakerConstant k1 = c1(beta(-92));
  CHECK(k1.d == 6);
  CHECK(std::abs(k1.h.to_double() - 14.6375381696) < 1e-6);
  CHECK(std::abs(k1.c1.to_double() - 8295.085) < 0.01);
  BakerConstant k2 = c1(beta(-124));
  CHECK(k2.d == 6);
  CHECK(std::abs(k2.h.to_double() - 19.771695286) < 1e-6);
  CHECK(std::abs(k2.c1.to_double() - 10125.995) < 0.01);
  // Doubling the precision of the height moves c1 by less than 0.01.
  Ball h2 = height(refine(beta(-92), 2 * beta(-92).prec()));
  Ball c2 = c1_formula(6, upper_point(h2));
  CHECK(std::abs(c2.to_double() - k1.c1.to_double()) < 0.01);
}

TEST_CASE("lower bounds") {
  BakerConstant k1 = c1(beta(-92));
  auto r1 = lower_bound(beta(-92), k1, 1);
  CHECK(r1.mode == BoundMode::Direct);
  CHECK(r1.bound.is_positive());
  auto r13 = lower_bound(beta(-92), k1, 13);
  CHECK(r13.mode == BoundMode::Asymptotic);
  CHECK(r13.bound.is_positive());
  CHECK(certainly_less(r13.bound, Ball::from_int(2)));
  auto r12 = lower_bound(beta(-92), k1, 12);
  CHECK(r12.bound.is_positive());
}

TEST_CASE("lower bound soundness up to 5000") {
  for (long d : {-92L, -124L}) {
    const AlgebraicNumber& b = beta(d);
    BakerConstant k = c1(b);
    for (unsigned long m = 1; m <= 5000; ++m) {
      LowerBoundResult r = lower_bound(b, k, m);
      Ball direct = one_minus_power_abs(b, m);
      if (!certainly_less_equal(r.bound, upper_point(direct))) {
        FAIL("bound exceeds |1 - beta^m| at m = " << m);
      }
    }
  }
}
