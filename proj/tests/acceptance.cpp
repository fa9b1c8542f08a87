// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace singmod;

namespace {

int failures = 0;

void report(int k, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "criterion " << k << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

template <typename F>
void run(int k, F&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(k, false, std::string("exception: ") + e.what());
  }
}

std::string pattern_text(const ValuationPattern& p) {
  std::ostringstream s;
  s << "p=" << p.p << " e=" << p.e << " m0=" << p.m0 << " v0=" << p.v0;
  return s.str();
}

}  // namespace

int main() {
  const std::vector<long> discs{-23, -92, -31, -124};

  run(1, [&] {
    bool ok = true;
    std::ostringstream d;
    for (long D : discs) {
      std::size_t h = reduced_forms(D).size();
      ok = ok && h == 3;
      d << "h(" << D << ")=" << h << " ";
    }
    report(1, ok, d.str());
  });

  run(2, [&] {
    bool ok = true;
    std::ostringstream d;
    for (long D : discs) {
      ClassPolynomial h = hilbert_class_poly(D);
      bool members = true;
      for (const auto& r : h.roots) members = members && h.poly.eval(r).contains_zero();
      std::size_t dom = dominant_root(h);
      bool real = h.roots[dom].im.is_exact() && h.roots[dom].im.contains_zero();
      ok = ok && h.stable && members && real;
      d << D << ":" << (h.stable && members && real ? "ok" : "bad") << " ";
    }
    report(2, ok, d.str() + "(stable rounding, root membership, dominant real root)");
  });

  RunConfig cfg;
  cfg.case_selector = "both";
  cfg.jobs = 2;
  CertifyResult result;
  try {
    result = certify(cfg);
  } catch (const std::exception& e) {
    for (int k = 3; k <= 10; ++k) report(k, false, std::string("certify failed: ") + e.what());
    return failures;
  }
  const CaseRun& c23 = result.runs[0];
  const CaseRun& c31 = result.runs[1];

  run(3, [&] {
    const ValuationPattern& p = c23.data.pattern;
    bool ok = p.p == 23 && p.e == 2 && p.m0 == 1 && p.v0 == 1;
    std::string d = "scan finds " + pattern_text(p);
    if (c23.data.printed_pattern) d += "; at p=23: " + pattern_text(*c23.data.printed_pattern);
    report(3, ok, d);
  });

  run(4, [&] {
    OracleReport a = valuation_scan_oracle(c23.data, 200);
    OracleReport b = valuation_scan_oracle(c31.data, 200);
    std::string d = a.summary() + "; " + b.summary();
    for (const auto& l : a.lines) d += " [" + l + "]";
    for (const auto& l : b.lines) d += " [" + l + "]";
    report(4, a.ok() && b.ok(), d);
  });

  run(5, [&] {
    bool ok = true;
    std::ostringstream d;
    for (const CaseRun* r : {&c23, &c31}) {
      const PrintedValues& pv = printed_values(r->data.id);
      Ball diff = abs(r->data.baker.c1 - Ball::from_decimal(pv.c1));
      bool close = certainly_less(diff, Ball::from_decimal("0.5"));
      ok = ok && close;
      d << "case " << r->data.id.name << ": c1=" << r->data.baker.c1.mid().to_string(9) << " printed " << pv.c1
        << " ";
    }
    report(5, ok, d.str());
  });

  run(6, [&] {
    const MasterResult& m = c23.master;
    bool ok = m.positivity_threshold >= 2000 && m.positivity_threshold <= 2075;
    std::ostringstream d;
    d << "case 23 threshold " << m.positivity_threshold << " (0.98 form from " << m.threshold98
      << "); printed-constant replay " << c23.replay.positivity_threshold;
    report(6, ok, d.str());
  });

  run(7, [&] {
    bool ok = true;
    std::ostringstream d;
    for (const CaseRun* r : {&c23, &c31}) {
      const PrintedValues& pv = printed_values(r->data.id);
      bool within = std::labs(r->master.n_max - pv.n_max) <= 10;
      bool m_ok = r->master.implied_m <= pv.implied_m && r->master.contradiction;
      ok = ok && within && m_ok;
      d << "case " << r->data.id.name << ": n_max " << r->master.n_max << " (printed " << pv.n_max << "), m <= "
        << r->master.implied_m << ", contradiction " << (r->master.contradiction ? "yes" : "no") << " ";
    }
    report(7, ok, d.str());
  });

  run(8, [&] {
    bool ok = true;
    std::ostringstream d;
    for (const CaseRun* r : {&c23, &c31}) {
      const PrintedValues& pv = printed_values(r->data.id);
      bool rows = r->table.size() == pv.table_n.size();
      for (std::size_t i = 0; rows && i < r->table.size(); ++i) {
        const BoundTableRow& row = r->table[i];
        bool logged = !row.matches_printed || !row.c2_matches_printed;
        rows = rows && (row.n_max == pv.table_n[i] || (row.n_max < pv.table_n[i] && logged));
      }
      ok = ok && rows && r->residual_matches_printed;
      d << "case " << r->data.id.name << ": ceilings " << (rows ? "ok" : "bad") << ", residual set "
        << (r->residual_matches_printed ? "exact" : "differs") << " ";
    }
    report(8, ok, d.str());
  });

  run(9, [&] {
    bool ok = true;
    std::ostringstream d;
    for (const CaseRun* r : {&c23, &c31}) {
      long good = 0;
      for (const auto& chk : r->verdict.checks) good += chk.passed();
      bool all = good == static_cast<long>(r->residual.size()) && r->verdict.proven;
      ok = ok && all;
      d << "case " << r->data.id.name << ": " << good << "/" << r->residual.size() << " pairs, "
        << (r->verdict.proven ? "PROVEN" : "INCOMPLETE") << " ";
    }
    report(9, ok && result.proven, d.str());
  });

  run(10, [&] {
    OracleReport h = height_laws_oracle(100, 1);
    OracleReport l23 = lower_bound_oracle(c23.data, 5000);
    OracleReport l31 = lower_bound_oracle(c31.data, 5000);
    OracleReport p23 = place_degree_oracle(c23.data, cfg.case_config.prime_limit);
    OracleReport p31 = place_degree_oracle(c31.data, cfg.case_config.prime_limit);
    RunConfig again = cfg;
    again.jobs = 1;
    bool same = certificate_text(certify(again).certificate) == certificate_text(result.certificate);
    bool ok = h.ok() && l23.ok() && l31.ok() && p23.ok() && p31.ok() && same;
    std::string d = h.summary() + "; " + l23.summary() + "; " + l31.summary() + "; " + p23.summary() + "; " +
                    p31.summary() + "; determinism " + (same ? "byte-identical" : "DIFFERS");
    report(10, ok, d);
  });

  std::cout << (10 - failures) << "/10 criteria pass" << std::endl;
  return failures;
}
