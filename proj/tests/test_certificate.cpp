#include <doctest.h>

#include "certificate.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace singmod;

namespace {

const CertifyResult& run23() {
  static CertifyResult r = [] {
    RunConfig cfg;
    cfg.case_selector = "23";
    return certify(cfg);
  }();
  return r;
}

}  // namespace

TEST_CASE("real_json encloses the ball") {
  Ball x = Ball::pi();
  Json j = real_json(x);
  std::string v = j["value"].get<std::string>();
  CHECK(v.substr(0, 8) == "3.141592");
  long k = j["err_exp"].get<long>();
  CHECK(k < -60);
  Ball dec = Ball::from_decimal(v, 512);
  Float bound(kRadiusPrecision);
  mpfr_set_ui_2exp(bound.get(), 1, k, MPFR_RNDU);
  dec.add_error(bound.get());
  CHECK(dec.overlaps(x));
  CHECK(real_json(Ball::from_int(5))["err_exp"].is_null());
}

TEST_CASE("decimal literals with exponents") {
  CHECK(Ball::from_decimal("1.5e+03").contains(mpz_class(1500)));
  CHECK(Ball::from_decimal("-2.5e-1").contains(mpq_class(-1, 4)));
  CHECK_THROWS_AS(Ball::from_decimal("1e"), InvalidArgument);
}

TEST_CASE("config validation") {
  RunConfig cfg;
  CHECK_NOTHROW(validate_config(cfg));
  cfg.case_selector = "47";
  CHECK_THROWS_AS(validate_config(cfg), InvalidArgument);
  cfg.case_selector = "both";
  cfg.case_config.precision = 8192;
  CHECK_THROWS_AS(validate_config(cfg), InvalidArgument);
  cfg.case_config.precision = 256;
  cfg.jobs = 0;
  CHECK_THROWS_AS(validate_config(cfg), InvalidArgument);
  CHECK(selected_cases("both").size() == 2);
}

TEST_CASE("certificate content for case 23") {
  const CertifyResult& r = run23();
  CHECK(r.proven);
  const Json& cert = r.certificate;
  CHECK(cert["schema"] == kCertificateSchema);
  CHECK(cert["verdict"] == "PROVEN");
  const Json& c = cert["cases"][0];
  CHECK(c["case"] == "23");
  CHECK(c["quadforms"]["stage"] == "quadforms");
  CHECK(c["numfield"]["stage"] == "numfield");
  CHECK(c["localfield"]["stage"] == "localfield");
  CHECK(c["lmn"]["stage"] == "lmn");
  CHECK(c["bounds"]["stage"] == "bounds");
  CHECK(c["finale"]["stage"] == "finale");
  CHECK(c["quadforms"]["x"]["coefficients"].size() == 4);
  CHECK(c["localfield"]["routes_agree"] == true);
  CHECK(c["localfield"]["printed_prime"]["pattern"]["e"] == 2);
  CHECK(c["lmn"]["c1_printed"] == "4973.14");
  CHECK(c["bounds"]["printed_replay"]["n_max"] == 2092);
  CHECK(c["bounds"]["table"].size() == 12);
  CHECK(c["bounds"]["residual_set_matches_printed"] == true);
  CHECK(c["finale"]["checks"].size() == c["bounds"]["residual_set"].size());
  CHECK(c["orientation"]["note"].get<std::string>().find("exchanged") != std::string::npos);
}

TEST_CASE("certificate text is deterministic") {
  RunConfig cfg;
  cfg.case_selector = "23";
  cfg.jobs = 2;
  CHECK(certificate_text(certify(cfg).certificate) == certificate_text(run23().certificate));
}

TEST_CASE("loader and re-check") {
  std::string text = certificate_text(run23().certificate);
  Json j = load_certificate(text);
  RecheckReport ok = recheck_certificate(j);
  CHECK(ok.ok);
  for (const auto& f : ok.failures) MESSAGE(f);

  Json bad = j;
  bad["schema"] = "singmod-certificate/2";
  CHECK_THROWS_AS(load_certificate(bad.dump()), InvalidArgument);
  CHECK_THROWS_AS(load_certificate("not json"), InvalidArgument);
  Json missing = j;
  missing.erase("cases");
  CHECK_THROWS_AS(load_certificate(missing.dump()), InvalidArgument);

  Json tampered = j;
  tampered["cases"][0]["finale"]["checks"][0]["exact_norm"] = "1";
  CHECK_FALSE(recheck_certificate(tampered).ok);

  Json dropped = j;
  dropped["cases"][0]["bounds"]["residual_set"].erase(0);
  CHECK_FALSE(recheck_certificate(dropped).ok);

  Json relator = j;
  relator["cases"][0]["numfield"]["relator"][0] = "12345";
  CHECK_FALSE(recheck_certificate(relator).ok);
}

TEST_CASE("oracles on case 23") {
  const CaseData& c = run23().runs[0].data;
  OracleReport scan = valuation_scan_oracle(c, 200);
  CHECK(scan.ok());
  CHECK(scan.lines.size() == 2);
  OracleReport table = table_sample_oracle(c, 100, 7);
  CHECK(table.ok());
  OracleReport bve = ball_vs_exact_oracle(c, run23().runs[0].residual);
  CHECK(bve.ok());
  CHECK(bve.total == 7);
}

TEST_CASE("height laws oracle") {
  OracleReport r = height_laws_oracle(10, 3);
  CHECK(r.ok());
  CHECK(r.total == 10);
}
