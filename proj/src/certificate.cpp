#include "certificate.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>

#include "errors.hpp"
#include "parallel.hpp"

namespace singmod {

namespace {

const char* kOrientationNote =
    "x is the modulus of discriminant 4*D' and y of discriminant D'; the swapped orientation is the same "
    "equation with (A,m) and (B,n) exchanged, so this orientation suffices";
const char* kLabelNote =
    "x1 is the dominant real conjugate, Im(x2) > 0 and x3 = conj(x2); exchanging x2 and x3 conjugates the "
    "collinearity identity, so the bounds do not depend on this choice";

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(const mpq_class& v) { return v.get_str(); }

Json zpoly_json(const ZPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.c) a.push_back(str(c));
  return a;
}

Json qpoly_json(const QPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.c) a.push_back(str(c));
  return a;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Json class_poly_json(const ClassPolynomial& h, const Triple& labelled) {
  Json j;
  j["discriminant"] = h.discriminant;
  j["class_number"] = h.forms.size();
  Json forms = Json::array();
  for (const auto& f : h.forms) forms.push_back({f.a, f.b, f.c});
  j["forms"] = forms;
  j["coefficients"] = zpoly_json(h.poly);
  j["rounding_precision"] = h.precision;
  j["stable_at_double_precision"] = h.stable;
  Json conj = Json::array();
  for (const auto& a : labelled) conj.push_back(complex_json(a.value()));
  j["conjugates"] = conj;
  return j;
}

Json valuations_json(const ConjugateValuations& v) {
  Json j;
  j["x"] = {v.x[0], v.x[1], v.x[2]};
  j["y"] = {v.y[0], v.y[1], v.y[2]};
  return j;
}

Json pattern_json(const ValuationPattern& p) {
  Json j;
  j["p"] = p.p;
  j["place"] = p.place_id;
  j["e"] = p.e;
  j["f"] = p.f;
  j["valuations"] = valuations_json(p.valuations);
  j["m0"] = p.m0;
  j["v0"] = p.v0;
  j["local_precision"] = p.absprec;
  j["exponent_bound"] = "m <= " + std::to_string(p.e) + " log(n)/log(" + std::to_string(p.p) +
                        ") + " + std::to_string(p.v0);
  return j;
}

Json master_json(const MasterResult& r) {
  Json j;
  j["K"] = real_json(r.K);
  j["K_within_2_05"] = r.K_within_2_05;
  j["positivity_threshold"] = r.positivity_threshold;
  j["threshold_098"] = r.threshold98;
  j["n_max"] = r.n_max;
  j["implied_m"] = r.implied_m;
  j["small_n_m"] = r.small_n_m;
  j["contradiction"] = r.contradiction;
  return j;
}

Json pairs_json(const std::vector<std::pair<long, long>>& pairs) {
  Json a = Json::array();
  for (const auto& [m, n] : pairs) a.push_back({m, n});
  return a;
}

std::vector<std::pair<long, long>> printed_residual(const PrintedValues& pv) {
  std::vector<std::pair<long, long>> out;
  for (const auto& [m, nmax] : pv.residual_rows) {
    for (long n = 1; n <= nmax; ++n) out.emplace_back(m, n);
  }
  return out;
}

bool local_routes_agree(const CaseData& c) {
  PlaceSet ps = places_above(c.sf, c.pattern.p, c.pattern.absprec);
  std::vector<ConjugateValuations> direct = conjugate_valuations_direct(c.pairing, c.sf, ps);
  if (direct.size() != ps.places.size()) return false;
  for (std::size_t i = 0; i < ps.places.size(); ++i) {
    if (!(conjugate_valuations(c.sf, ps.places[i]) == direct[i])) return false;
  }
  return direct[c.pattern.place_id] == c.pattern.valuations;
}

Json case_json(const CaseRun& r, const RunConfig& config) {
  const CaseData& c = r.data;
  const PrintedValues& pv = printed_values(c.id);
  Json j;
  j["case"] = c.id.name;

  Json orient;
  orient["x_discriminant"] = c.id.dx;
  orient["y_discriminant"] = c.id.dy;
  orient["note"] = kOrientationNote;
  orient["labels"] = kLabelNote;
  j["orientation"] = orient;

  Json qf;
  qf["stage"] = "quadforms";
  qf["x"] = class_poly_json(c.hx, c.pairing.x);
  qf["y"] = class_poly_json(c.hy, c.pairing.y);
  j["quadforms"] = qf;

  Json nf;
  nf["stage"] = "numfield";
  nf["relator"] = qpoly_json(c.pairing.relator);
  nf["y_labels_swapped"] = c.pairing.y_swapped;
  Json theta;
  theta["c"] = c.sf.c;
  theta["minpoly"] = zpoly_json(c.sf.minpoly);
  theta["embedding"] = c.sf.index;
  Json xs = Json::array(), ys = Json::array();
  for (int i = 0; i < 3; ++i) {
    xs.push_back(qpoly_json(c.sf.x[i]));
    ys.push_back(qpoly_json(c.sf.y[i]));
  }
  theta["x"] = xs;
  theta["y"] = ys;
  nf["theta"] = theta;
  Json ratios;
  ratios["log_abs_x1_x2"] = real_json(c.arch.log_x12);
  ratios["log_abs_y1_y2"] = real_json(c.arch.log_y12);
  ratios["abs_x3_x1"] = real_json(c.arch.abs_x31);
  ratios["abs_y3_y1"] = real_json(c.arch.abs_y31);
  nf["ratios"] = ratios;
  nf["beta_minpoly"] = zpoly_json(c.beta.minpoly);
  nf["alpha_minpoly"] = zpoly_json(c.alpha.minpoly);
  j["numfield"] = nf;

  Json lf;
  lf["stage"] = "localfield";
  lf["prime_limit"] = config.case_config.prime_limit;
  lf["scan"] = pattern_json(c.pattern);
  lf["routes_agree"] = r.routes_agree;
  Json printed_at;
  printed_at["p"] = pv.printed_prime;
  if (c.printed_pattern) {
    printed_at["pattern"] = pattern_json(*c.printed_pattern);
  } else {
    printed_at["pattern"] = nullptr;
  }
  printed_at["matches_scan"] = c.printed_pattern && c.printed_pattern->p == c.pattern.p &&
                               c.printed_pattern->e == c.pattern.e && c.printed_pattern->v0 == c.pattern.v0 &&
                               c.printed_pattern->m0 == c.pattern.m0;
  lf["printed_prime"] = printed_at;
  j["localfield"] = lf;

  Json lm;
  lm["stage"] = "lmn";
  lm["d"] = c.baker.d;
  lm["D"] = real_json(c.baker.D);
  lm["height_beta"] = real_json(c.baker.h);
  lm["c1_prime"] = real_json(c.baker.c1p);
  lm["c1"] = real_json(c.baker.c1);
  lm["c1_printed"] = pv.c1;
  Ball printed = Ball::from_decimal(pv.c1);
  Ball diff = c.baker.c1 - printed;
  lm["c1_within_0_5_of_printed"] = certainly_less(abs(diff), Ball::from_decimal("0.5"));
  lm["c1_used_downstream"] = "computed";
  Json rec;
  rec["d"] = 3;
  rec["height_x1"] = real_json(r.height_x);
  rec["height_bound"] = "2 h(x1)";
  rec["c1"] = real_json(r.c1_reconstruction);
  lm["printed_reconstruction"] = rec;
  j["lmn"] = lm;

  Json bd;
  bd["stage"] = "bounds";
  bd["master"] = master_json(r.master);
  Json replay = master_json(r.replay);
  replay["c1"] = pv.c1;
  replay["p"] = c.printed_pattern ? c.printed_pattern->p : c.pattern.p;
  bd["printed_replay"] = replay;
  Json printed_master;
  printed_master["positivity_threshold"] = pv.positivity_threshold;
  printed_master["threshold_098"] = pv.threshold98;
  printed_master["n_max"] = pv.n_max;
  printed_master["implied_m"] = pv.implied_m;
  bd["printed"] = printed_master;
  Json table = Json::array();
  for (std::size_t i = 0; i < r.table.size(); ++i) {
    const BoundTableRow& row = r.table[i];
    Json t;
    t["m"] = row.m;
    t["c2"] = real_json(row.c2);
    t["n_max"] = row.n_max;
    t["printed_c2"] = i < pv.c2.size() ? Json(fixed2(pv.c2[i])) : Json(nullptr);
    t["printed_n_max"] = i < pv.table_n.size() ? Json(pv.table_n[i]) : Json(nullptr);
    t["n_max_matches_printed"] = row.matches_printed;
    t["c2_matches_printed"] = row.c2_matches_printed;
    bool over = i < pv.table_n.size() && row.n_max > pv.table_n[i];
    t["discrepancy"] = !row.matches_printed || !row.c2_matches_printed;
    t["exceeds_printed"] = over;
    table.push_back(t);
  }
  bd["table"] = table;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json t;
    t["m"] = row.m;
    t["n_max"] = row.n_max;
    t["exponent_ceiling"] = real_json(row.ceiling);
    t["kept"] = row.kept;
    rows.push_back(t);
  }
  bd["residual_rows"] = rows;
  bd["residual_set"] = pairs_json(r.residual);
  bd["residual_set_matches_printed"] = r.residual_matches_printed;
  j["bounds"] = bd;

  Json fin;
  fin["stage"] = "finale";
  Json checks = Json::array();
  for (const auto& chk : r.verdict.checks) {
    Json t;
    t["m"] = chk.m;
    t["n"] = chk.n;
    t["determinant"] = complex_json(chk.ball.value);
    t["precision"] = chk.ball.precision;
    t["real_part_contains_zero"] = chk.ball.real_part_contains_zero;
    t["ball_nonzero"] = chk.ball.certified_nonzero;
    t["exact_norm"] = str(chk.norm);
    t["norm_nonzero"] = chk.norm_nonzero;
    t["routes_agree"] = chk.routes_agree;
    t["verdict"] = chk.passed() ? "nonzero" : "unproven";
    checks.push_back(t);
  }
  fin["checks"] = checks;
  j["finale"] = fin;

  Json prec;
  prec["base"] = config.case_config.precision;
  prec["cap"] = config.case_config.precision_cap;
  prec["class_polynomial_x"] = c.hx.precision;
  prec["class_polynomial_y"] = c.hy.precision;
  prec["pairing"] = c.pairing.precision;
  prec["splitting_field"] = c.sf.precision;
  prec["local_digits"] = c.pattern.absprec;
  prec["height"] = c.baker.h.prec();
  j["precision_trace"] = prec;

  j["verdict"] = r.verdict.proven ? "PROVEN" : "INCOMPLETE";
  j["failing_stage"] = r.verdict.proven ? Json(nullptr) : Json(r.verdict.failing_stage);
  j["detail"] = r.verdict.detail;
  return j;
}

}  // namespace

Json real_json(const Ball& x) {
  Json j;
  j["value"] = x.mid().to_string(20);
  Ball dec = Ball::from_decimal(x.mid().to_string(20), x.prec() + 64);
  Ball diff = x - dec;
  Float lo = diff.lower();
  Float hi = diff.upper();
  Float err(kRadiusPrecision);
  mpfr_abs(lo.get(), lo.get(), MPFR_RNDU);
  mpfr_abs(hi.get(), hi.get(), MPFR_RNDU);
  mpfr_max(err.get(), lo.get(), hi.get(), MPFR_RNDU);
  if (mpfr_zero_p(err.get())) {
    j["err_exp"] = nullptr;
  } else {
    // err < 2^exp(err).
    j["err_exp"] = static_cast<long>(mpfr_get_exp(err.get()));
  }
  return j;
}

Json complex_json(const CBall& z) {
  Json j;
  j["re"] = real_json(z.re);
  j["im"] = real_json(z.im);
  return j;
}

void validate_config(const RunConfig& config) {
  selected_cases(config.case_selector);
  const CaseConfig& c = config.case_config;
  if (c.precision < 64) throw InvalidArgument("cli", "precision must be at least 64 bits");
  if (c.precision > c.precision_cap) throw InvalidArgument("cli", "precision exceeds the precision cap");
  if (c.prime_limit < 11) throw InvalidArgument("cli", "prime limit must be at least 11");
  if (config.jobs == 0) throw InvalidArgument("cli", "jobs must be positive");
}

std::vector<CaseId> selected_cases(const std::string& selector) {
  if (selector == "both") return {case_by_name("23"), case_by_name("31")};
  if (selector == "23" || selector == "31") return {case_by_name(selector)};
  throw InvalidArgument("cli", "case must be 23, 31 or both");
}

CaseRun run_case(const CaseId& id, const RunConfig& config) {
  const CaseConfig& cc = config.case_config;
  CaseRun r;
  r.data = build_case(id, cc);
  const CaseData& c = r.data;
  const PrintedValues& pv = printed_values(id);
  r.routes_agree = local_routes_agree(c);
  r.height_x = height(c.pairing.x[0]);
  r.c1_reconstruction = c1_formula(3, Ball::from_int(2) * r.height_x);
  MasterInputs in = master_inputs(c);
  r.master = master_n_bound(in);
  r.replay = master_n_bound(printed_master_inputs(c));
  r.table = c2_table(c, &pv);
  r.rows = residual_rows(in, r.table);
  r.residual = residual_set(r.rows);
  r.residual_matches_printed = r.residual == printed_residual(pv);
  r.verdict = close_case(c, r.master, r.residual, r.residual, config.jobs, cc.precision, cc.precision_cap);
  return r;
}

CertifyResult certify(const RunConfig& config) {
  validate_config(config);
  std::vector<CaseId> ids = selected_cases(config.case_selector);
  CertifyResult out;
  out.runs.resize(ids.size());
  RunConfig inner = config;
  unsigned outer = std::min<unsigned>(config.jobs, static_cast<unsigned>(ids.size()));
  inner.jobs = std::max(1u, config.jobs / std::max(1u, outer));
  parallel_for(ids.size(), outer, [&](std::size_t i) { out.runs[i] = run_case(ids[i], inner); });

  Json cert;
  cert["schema"] = kCertificateSchema;
  Json tool;
  tool["name"] = "singmod";
  tool["version"] = kToolVersion;
  cert["tool"] = tool;
  Json cfg;
  cfg["case"] = config.case_selector;
  cfg["precision"] = config.case_config.precision;
  cfg["precision_cap"] = config.case_config.precision_cap;
  cfg["prime_limit"] = config.case_config.prime_limit;
  cert["config"] = cfg;
  Json cases = Json::array();
  out.proven = true;
  for (const auto& r : out.runs) {
    cases.push_back(case_json(r, config));
    out.proven = out.proven && r.verdict.proven;
    out.diagnostics.push_back("case " + r.data.id.name + ": class polynomial cache " + r.data.hx.cache_status +
                              " (" + std::to_string(r.data.id.dx) + "), " + r.data.hy.cache_status + " (" +
                              std::to_string(r.data.id.dy) + ")");
  }
  cert["cases"] = cases;
  cert["verdict"] = out.proven ? "PROVEN" : "INCOMPLETE";
  out.certificate = std::move(cert);
  return out;
}

std::string certificate_text(const Json& cert) { return cert.dump(2) + "\n"; }

Json load_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidArgument("cli", std::string("certificate is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string()) {
    throw InvalidArgument("cli", "certificate has no schema version");
  }
  if (j["schema"].get<std::string>() != kCertificateSchema) {
    throw InvalidArgument("cli", "unknown certificate schema " + j["schema"].get<std::string>());
  }
  for (const char* key : {"tool", "config", "cases", "verdict"}) {
    if (!j.contains(key)) throw InvalidArgument("cli", std::string("certificate lacks '") + key + "'");
  }
  for (const auto& c : j["cases"]) {
    for (const char* key : {"case", "orientation", "quadforms", "numfield", "localfield", "lmn", "bounds",
                            "finale", "precision_trace", "verdict"}) {
      if (!c.contains(key)) throw InvalidArgument("cli", std::string("case certificate lacks '") + key + "'");
    }
  }
  return j;
}

namespace {

ZPoly zpoly_from(const Json& a) {
  std::vector<mpz_class> c;
  for (const auto& v : a) c.emplace_back(v.get<std::string>());
  return ZPoly(std::move(c));
}

QPoly qpoly_from(const Json& a) {
  std::vector<mpq_class> c;
  for (const auto& v : a) {
    mpq_class q(v.get<std::string>());
    q.canonicalize();
    c.push_back(q);
  }
  return QPoly(std::move(c));
}

void recheck_case(const Json& c, RecheckReport& rep) {
  const std::string name = c["case"].get<std::string>();
  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.failures.push_back("case " + name + ": " + what);
  };

  ZPoly hx = zpoly_from(c["quadforms"]["x"]["coefficients"]);
  ZPoly hy = zpoly_from(c["quadforms"]["y"]["coefficients"]);
  if (hx.degree() != 3 || hy.degree() != 3 || hx.lead() != 1 || hy.lead() != 1) fail("class polynomials not monic cubics");
  if (c["quadforms"]["x"]["forms"].size() != 3 || c["quadforms"]["y"]["forms"].size() != 3) fail("class number is not 3");
  QPoly rel = qpoly_from(c["numfield"]["relator"]);
  if (!relator_identity_holds(hx, hy, rel)) fail("H_y(P) is not divisible by H_x");

  SplittingField sf;
  sf.minpoly = zpoly_from(c["numfield"]["theta"]["minpoly"]);
  QPoly f(sf.minpoly);
  for (int i = 0; i < 3; ++i) {
    sf.x[i] = qpoly_from(c["numfield"]["theta"]["x"][i]);
    sf.y[i] = qpoly_from(c["numfield"]["theta"]["y"][i]);
    if (!(compose(QPoly(hx), sf.x[i]) % f).is_zero()) fail("x" + std::to_string(i + 1) + " is not a root of H_x");
    if (!(compose(QPoly(hy), sf.y[i]) % f).is_zero()) fail("y" + std::to_string(i + 1) + " is not a root of H_y");
    if (!((compose(rel, sf.x[i]) - sf.y[i]) % f).is_zero()) fail("y" + std::to_string(i + 1) + " != P(x)");
  }

  const Json& scan = c["localfield"]["scan"];
  MasterInputs in;
  in.p = scan["p"].get<long>();
  in.e = scan["e"].get<int>();
  in.v0 = scan["v0"].get<long>();
  const Json& master = c["bounds"]["master"];
  long implied = exponent_ceiling_floor(in, master["n_max"].get<unsigned long>());
  if (implied != master["implied_m"].get<long>()) fail("implied m ceiling does not match n_max");
  if (master["contradiction"].get<bool>() && implied >= static_cast<long>(kAsymptoticFrom)) {
    fail("contradiction claimed with m ceiling >= 13");
  }

  std::vector<std::pair<long, long>> expected;
  for (const auto& row : c["bounds"]["table"]) {
    long m = row["m"].get<long>();
    long n_max = row["n_max"].get<long>();
    bool kept = n_max >= 1 && m <= exponent_ceiling_floor(in, static_cast<unsigned long>(n_max));
    if (kept) {
      for (long n = 1; n <= n_max; ++n) expected.emplace_back(m, n);
    }
  }
  std::vector<std::pair<long, long>> listed;
  for (const auto& pr : c["bounds"]["residual_set"]) listed.emplace_back(pr[0].get<long>(), pr[1].get<long>());
  if (listed != expected) fail("residual set does not follow from the table and the exponent ceiling");

  std::vector<std::pair<long, long>> checked;
  for (const auto& chk : c["finale"]["checks"]) {
    long m = chk["m"].get<long>();
    long n = chk["n"].get<long>();
    checked.emplace_back(m, n);
    mpq_class norm = exact_norm_check(sf, static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    mpq_class listed_norm(chk["exact_norm"].get<std::string>());
    listed_norm.canonicalize();
    if (norm != listed_norm) fail("exact norm at (" + std::to_string(m) + "," + std::to_string(n) + ") differs");
    if (norm == 0) fail("determinant vanishes at (" + std::to_string(m) + "," + std::to_string(n) + ")");
  }
  bool proven = c["verdict"].get<std::string>() == "PROVEN";
  if (proven) {
    for (const auto& pr : listed) {
      if (std::find(checked.begin(), checked.end(), pr) == checked.end()) fail("residual pair without a check");
    }
    if (!master["contradiction"].get<bool>()) fail("PROVEN without the m >= 13 contradiction");
  }
}

}  // namespace

RecheckReport recheck_certificate(const Json& cert) {
  RecheckReport rep;
  bool all = true;
  try {
    for (const auto& c : cert["cases"]) {
      recheck_case(c, rep);
      all = all && c["verdict"].get<std::string>() == "PROVEN";
    }
    if ((cert["verdict"].get<std::string>() == "PROVEN") != all) {
      rep.ok = false;
      rep.failures.push_back("overall verdict disagrees with the case verdicts");
    }
  } catch (const std::exception& e) {
    rep.ok = false;
    rep.failures.push_back(std::string("malformed certificate: ") + e.what());
  }
  return rep;
}

}  // namespace singmod
