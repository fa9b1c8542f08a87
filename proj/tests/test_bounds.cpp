#include <doctest.h>

#include <map>

#include "bounds.hpp"
#include "errors.hpp"

using namespace singmod;

namespace {

const CaseData& data(const std::string& name) {
  static std::map<std::string, CaseData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_case(case_by_name(name))).first;
  return it->second;
}

}  // namespace

TEST_CASE("case lookup") {
  CHECK(case_by_name("23").dx == -92);
  CHECK(case_by_name("31").dy == -31);
  CHECK_THROWS_AS(case_by_name("17"), InvalidArgument);
}

TEST_CASE("archimedean ratios") {
  const auto& a = data("23").arch;
  CHECK(std::abs(a.log_x12.to_double() - 20.104812) < 1e-5);
  CHECK(std::abs(a.log_y12.to_double() - 7.5103707) < 1e-6);
  CHECK(std::abs(a.abs_y31.to_double() - 0.000547378) < 1e-9);
  const auto& b = data("31").arch;
  CHECK(std::abs(b.log_x12.to_double() - 28.553603) < 1e-5);
  CHECK(std::abs(b.log_y12.to_double() - 8.7437836) < 1e-6);
  CHECK(std::abs(b.abs_y31.to_double() - 0.000159449) < 1e-9);
}

TEST_CASE("denominator lower bound") {
  const CaseData& c = data("23");
  auto d11 = denominator_lower_bound(c, 1, 1);
  REQUIRE(d11);
  CHECK(d11->is_positive());
  MasterResult r = master_n_bound(master_inputs(c));
  CHECK(denominator_lower_bound(c, 13, static_cast<unsigned long>(r.positivity_threshold)));
  CHECK_FALSE(denominator_lower_bound(c, 13, static_cast<unsigned long>(r.positivity_threshold - 1)));
}

TEST_CASE("master bound with the computed constants") {
  MasterResult r1 = master_n_bound(master_inputs(data("23")));
  CHECK(r1.K_within_2_05);
  CHECK(r1.positivity_threshold == 3110);
  CHECK(r1.n_max == 3125);
  CHECK(r1.implied_m == 5);
  CHECK(r1.contradiction);
  MasterResult r2 = master_n_bound(master_inputs(data("31")));
  CHECK(r2.positivity_threshold == 3276);
  CHECK(r2.n_max == 3295);
  CHECK(r2.implied_m == 5);
  CHECK(r2.contradiction);
}

TEST_CASE("master bound replay with the printed constants") {
  MasterResult r1 = master_n_bound(printed_master_inputs(data("23")));
  CHECK(r1.positivity_threshold == 2075);
  CHECK(r1.threshold98 == 2076);
  CHECK(r1.n_max == 2092);
  CHECK(r1.implied_m == 5);
  MasterResult r2 = master_n_bound(printed_master_inputs(data("31")));
  CHECK(r2.threshold98 == 1441);
  // The printed 1720 does not follow from the case-2 ratios.
  CHECK(r2.n_max == 1457);
}

TEST_CASE("master bound is reproducible across precisions") {
  MasterInputs in = master_inputs(data("23"));
  MasterResult a = master_n_bound(in);
  MasterResult b = master_n_bound(in);
  CHECK(a.n_max == b.n_max);
  CHECK(a.positivity_threshold == b.positivity_threshold);
  MasterInputs hi = in;
  hi.c1 = in.c1.with_precision(512);
  hi.arch.log_x12 = in.arch.log_x12.with_precision(512);
  hi.arch.log_y12 = in.arch.log_y12.with_precision(512);
  hi.arch.abs_x31 = in.arch.abs_x31.with_precision(512);
  hi.arch.abs_y31 = in.arch.abs_y31.with_precision(512);
  CHECK(master_n_bound(hi).n_max == a.n_max);
}

TEST_CASE("c2 tables reproduce the printed ceilings") {
  for (const std::string name : {"23", "31"}) {
    const CaseData& c = data(name);
    const PrintedValues& pv = printed_values(c.id);
    auto table = c2_table(c, &pv);
    REQUIRE(table.size() == 12);
    for (const auto& row : table) {
      CAPTURE(row.m);
      CHECK(row.n_max == pv.table_n[row.m - 1]);
      CHECK(row.c2.is_positive());
    }
  }
}

TEST_CASE("residual sets") {
  for (const std::string name : {"23", "31"}) {
    const CaseData& c = data(name);
    const PrintedValues& pv = printed_values(c.id);
    auto rows = residual_rows(master_inputs(c), c2_table(c));
    std::vector<std::pair<long, long>> expected;
    for (auto [m, nmax] : pv.residual_rows)
      for (long n = 1; n <= nmax; ++n) expected.emplace_back(m, n);
    CHECK(residual_set(rows) == expected);
    // Every dropped row violates the p-adic ceiling at its own n bound.
    for (const auto& r : rows) {
      if (r.m >= 3) {
        CHECK_FALSE(r.kept);
        CHECK(certainly_less(r.ceiling, Ball::from_int(r.m)));
      }
    }
  }
}
