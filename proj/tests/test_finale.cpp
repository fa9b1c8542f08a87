#include <doctest.h>

#include <map>

#include "errors.hpp"
#include "finale.hpp"

using namespace singmod;

namespace {

const CaseData& data(const std::string& name) {
  static std::map<std::string, CaseData> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_case(case_by_name(name))).first;
  return it->second;
}

std::vector<std::pair<long, long>> required(const CaseData& c) {
  return residual_set(residual_rows(master_inputs(c), c2_table(c)));
}

}  // namespace

TEST_CASE("determinant ball at (1,1)") {
  const CaseData& c = data("23");
  DeterminantBall d = determinant_ball(c.pairing, 1, 1);
  CHECK(d.certified_nonzero);
  CHECK(d.real_part_contains_zero);
  // Swapping rows 2 and 3 negates the determinant.
  OrbitPairing swapped = c.pairing;
  std::swap(swapped.x[1], swapped.x[2]);
  std::swap(swapped.y[1], swapped.y[2]);
  DeterminantBall s = determinant_ball(swapped, 1, 1);
  CHECK(s.value.im.overlaps(-d.value.im));
  CHECK_FALSE(s.value.im.overlaps(d.value.im));
}

TEST_CASE("exact norm agrees with the ball") {
  const CaseData& c = data("23");
  for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 1}, {2, 5}}) {
    NonvanishingCheck chk = check_pair(c, m, n);
    CHECK(chk.norm_nonzero);
    CHECK(chk.norm > 0);
    CHECK(chk.routes_agree);
    CHECK(chk.passed());
  }
}

TEST_CASE("exact norm vanishes on a degenerate determinant") {
  // With y replaced by x the determinant has two equal columns up to powers;
  // x_i^1 against x_i^1 gives a zero determinant.
  const CaseData& c = data("23");
  SplittingField sf = c.sf;
  sf.y = sf.x;
  CHECK(exact_norm_check(sf, 1, 1) == 0);
}

TEST_CASE("both cases close") {
  for (const std::string name : {"23", "31"}) {
    const CaseData& c = data(name);
    MasterResult master = master_n_bound(master_inputs(c));
    auto req = required(c);
    CaseVerdict v = close_case(c, master, req, req);
    CHECK(v.proven);
    CHECK(v.failing_stage.empty());
    CHECK(v.checks.size() == req.size());
  }
}

TEST_CASE("truncated residual set is incomplete") {
  const CaseData& c = data("23");
  MasterResult master = master_n_bound(master_inputs(c));
  auto req = required(c);
  auto truncated = req;
  truncated.pop_back();
  CaseVerdict v = close_case(c, master, req, truncated);
  CHECK_FALSE(v.proven);
  CHECK(v.failing_stage == "finale");
}

TEST_CASE("parallel checks match sequential ones") {
  const CaseData& c = data("31");
  MasterResult master = master_n_bound(master_inputs(c));
  auto req = required(c);
  CaseVerdict a = close_case(c, master, req, req, 1);
  CaseVerdict b = close_case(c, master, req, req, 3);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].norm == b.checks[i].norm);
}
