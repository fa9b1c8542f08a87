#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <numeric>
#include <fstream>

#include "errors.hpp"
#include "quadforms.hpp"

using namespace singmod;

namespace {

// Independent enumeration: every (a, b, c) with |b| <= a <= c of the given
// discriminant, reduced and primitive, without using the sqrt(|d|/3) bound.
std::size_t brute_force_class_number(long d) {
  std::size_t count = 0;
  for (long a = 1; a <= -d; ++a)
    for (long b = -a; b <= a; ++b) {
      long num = b * b - d;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      ++count;
    }
  return count;
}

ZPoly zp(std::initializer_list<const char*> c) {
  std::vector<mpz_class> v;
  for (auto s : c) v.emplace_back(s);
  return ZPoly(v);
}

}  // namespace

TEST_CASE("discriminant validation") {
  CHECK_THROWS_AS(reduced_forms(5), InvalidArgument);
  CHECK_THROWS_AS(reduced_forms(-2), InvalidArgument);
  CHECK_THROWS_AS(reduced_forms(0), InvalidArgument);
  CHECK_NOTHROW(reduced_forms(-3));
}

TEST_CASE("reduced forms") {
  auto f23 = reduced_forms(-23);
  REQUIRE(f23.size() == 3);
  CHECK(f23[0] == QuadraticForm{1, 1, 6});
  CHECK(f23[1] == QuadraticForm{2, -1, 3});
  CHECK(f23[2] == QuadraticForm{2, 1, 3});
  auto f3 = reduced_forms(-3);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0] == QuadraticForm{1, 1, 1});
  for (long d : {-23L, -92L, -31L, -124L}) {
    auto forms = reduced_forms(d);
    CHECK(forms.size() == 3);
    for (const auto& f : forms) CHECK(f.discriminant() == d);
  }
  for (long d = -3; d >= -400; --d) {
    long r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    CHECK(reduced_forms(d).size() == brute_force_class_number(d));
  }
}

TEST_CASE("q-expansion prefix") {
  auto s = j_series(4);
  CHECK(s[0] == 1);
  CHECK(s[1] == 744);
  CHECK(s[2] == 196884);
  CHECK(s[3] == 21493760);
  CHECK(s[4] == 864299970);
}

TEST_CASE("classical j values") {
  CBall ji = eval_j({1, 0, 1});
  CHECK(ji.re.contains(mpz_class(1728)));
  CHECK(ji.im.contains_zero());
  CBall jr = eval_j({1, 1, 1});
  CHECK(jr.re.contains(mpz_class(0)));
  CHECK(jr.im.contains_zero());
}

TEST_CASE("j radius and precision doubling agree") {
  QuadraticForm f{1, 0, 23};
  CBall a = eval_j(f, 256);
  CBall b = eval_j(f, 512);
  CHECK(a.overlaps(b));
  CHECK(a.re.to_double() == doctest::Approx(1.2207824e13).epsilon(1e-6));
  Float lim(64);
  mpfr_set_ui_2exp(lim.get(), 1, -128, MPFR_RNDN);
  CHECK(mpfr_lessequal_p(a.radius().get(), lim.get()));
  CHECK(j_terms(f, 512) > j_terms(f, 256));
  CHECK_THROWS_AS(eval_j(f, 40), PrecisionError);
}

TEST_CASE("class polynomials") {
  CHECK(hilbert_class_poly(-3).poly == zp({"0", "1"}));
  CHECK(hilbert_class_poly(-4).poly == zp({"-1728", "1"}));
  auto h23 = hilbert_class_poly(-23);
  CHECK(h23.poly == zp({"12771880859375", "-5151296875", "3491750", "1"}));
  CHECK(h23.stable);
  CHECK(discriminant(h23.poly) != 0);
  CHECK(hilbert_class_poly(-92).poly ==
        zp({"-6267542200571287109375", "-263033266852296875", "-12207823849750", "1"}));
  CHECK(hilbert_class_poly(-31).poly == zp({"1566028350940383", "-58682638134", "39491307", "1"}));
  CHECK(hilbert_class_poly(-124).poly ==
        zp({"-599530686551745232383", "-874125972104525910", "-1559739536377947", "1"}));
  for (long d : {-23L, -92L, -31L, -124L}) {
    auto h = hilbert_class_poly(d);
    CHECK(dominant_root(h) == 0);
    for (const auto& r : h.roots) CHECK(h.poly.eval(r).contains_zero());
  }
}

TEST_CASE("class polynomial cache is re-verified") {
  auto dir = std::filesystem::temp_directory_path() / "singmod_cache_test";
  std::filesystem::remove_all(dir);
  auto first = hilbert_class_poly(-23, 256, 4096, dir.string());
  CHECK(first.cache_status == "miss, stored");
  auto second = hilbert_class_poly(-23, 256, 4096, dir.string());
  CHECK(second.cache_status == "hit, verified");
  cache_store(dir.string(), -23, zp({"1", "2", "3", "1"}));
  auto third = hilbert_class_poly(-23, 256, 4096, dir.string());
  CHECK(third.cache_status == "stale entry replaced");
  CHECK(*cache_lookup(dir.string(), -23) == first.poly);
  std::filesystem::remove_all(dir);
}
