// singmod command line: certify, oracle and check. Links only the C API.

#include <CLI11.hpp>
#include <singmod/singmod.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

namespace {

struct Options {
  std::string case_selector = "both";
  long precision = 256;
  long precision_cap = 4096;
  long prime_limit = 200;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
  std::string cache_dir;
};

int exit_code(sm_status s) {
  switch (s) {
    case SM_OK:
      return 0;
    case SM_INCOMPLETE:
    case SM_ERR_PRECISION:
      return 1;
    case SM_ERR_USAGE:
      return 2;
    default:
      return 3;
  }
}

int report_error(sm_status s) {
  std::string stage = sm_last_error_stage();
  std::cerr << "error" << (stage.empty() ? "" : " [" + stage + "]") << ": " << sm_last_error() << "\n";
  return exit_code(s);
}

void add_run_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--case", o.case_selector, "23, 31 or both")->check(CLI::IsMember({"23", "31", "both"}));
  cmd->add_option("--precision", o.precision, "base precision in bits");
  cmd->add_option("--precision-cap", o.precision_cap, "precision cap in bits");
  cmd->add_option("--prime-limit", o.prime_limit, "largest prime scanned for the valuation pattern");
  cmd->add_option("--jobs", o.jobs, "worker threads");
  cmd->add_option("--cache-dir", o.cache_dir, "class polynomial cache directory")->envname("SINGMOD_CACHE_DIR");
}

// Prints the reason on failure.
sm_status make_config(const Options& o, sm_config** out) {
  if (o.precision > o.precision_cap) {
    std::cerr << "error [cli]: precision exceeds the precision cap\n";
    return SM_ERR_USAGE;
  }
  sm_config* cfg = sm_config_create();
  if (!cfg) return SM_ERR_INTERNAL;
  sm_status s = sm_config_set_case(cfg, o.case_selector.c_str());
  if (s == SM_OK) s = sm_config_set_precision(cfg, o.precision);
  if (s == SM_OK) s = sm_config_set_precision_cap(cfg, o.precision_cap);
  if (s == SM_OK) s = sm_config_set_prime_limit(cfg, o.prime_limit);
  if (s == SM_OK) s = sm_config_set_jobs(cfg, o.jobs);
  if (s == SM_OK && !o.cache_dir.empty()) s = sm_config_set_cache_dir(cfg, o.cache_dir.c_str());
  if (s != SM_OK) {
    sm_config_destroy(cfg);
    report_error(s);
    return s;
  }
  *out = cfg;
  return SM_OK;
}

int run_certify(const Options& o) {
  sm_config* cfg = nullptr;
  sm_status s = make_config(o, &cfg);
  if (s != SM_OK) return exit_code(s);
  sm_result* res = nullptr;
  s = sm_certify(cfg, &res);
  sm_config_destroy(cfg);
  if (!res) return report_error(s);
  for (size_t i = 0; i < sm_result_diagnostic_count(res); ++i) std::cerr << sm_result_diagnostic(res, i) << "\n";
  if (o.out.empty() || o.out == "-") {
    std::cout << sm_result_certificate(res);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << sm_result_certificate(res);
    if (!f) {
      std::cerr << "error [cli]: cannot write " << o.out << "\n";
      sm_result_destroy(res);
      return 2;
    }
  }
  std::cerr << "verdict: " << (sm_result_proven(res) ? "PROVEN" : "INCOMPLETE") << "\n";
  sm_result_destroy(res);
  return exit_code(s);
}

int run_oracle(const std::string& name, const Options& o, unsigned long param, unsigned long long seed) {
  sm_config* cfg = nullptr;
  sm_status s = make_config(o, &cfg);
  if (s != SM_OK) return exit_code(s);
  sm_report* rep = nullptr;
  s = sm_oracle(name.c_str(), cfg, param, seed, &rep);
  sm_config_destroy(cfg);
  if (!rep) return report_error(s);
  std::cout << sm_report_text(rep);
  sm_report_destroy(rep);
  return exit_code(s);
}

int run_check(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error [cli]: cannot read " << path << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << f.rdbuf();
  sm_report* rep = nullptr;
  sm_status s = sm_check_certificate(ss.str().c_str(), &rep);
  if (!rep) return report_error(s);
  std::cout << sm_report_text(rep);
  sm_report_destroy(rep);
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"singmod: certificates for the exceptional singular-modulus cases"};
  app.set_version_flag("--version", std::string(sm_version()));
  app.require_subcommand(1);

  Options opts;
  auto* certify = app.add_subcommand("certify", "run the pipeline and emit a certificate");
  add_run_options(certify, opts);
  certify->add_option("--out", opts.out, "certificate path (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "run a cross-check");
  oracle->require_subcommand(1);
  unsigned long max_m = 200;
  unsigned long samples = 100;
  unsigned long trials = 100;
  unsigned long long seed = 1;

  auto* scan = oracle->add_subcommand("valuation-scan", "valuation formula against direct computation");
  add_run_options(scan, opts);
  scan->add_option("--max-m", max_m, "largest exponent");
  auto* table = oracle->add_subcommand("table-sample", "random (m, n) against the table ceilings");
  add_run_options(table, opts);
  table->add_option("--samples", samples, "number of samples");
  table->add_option("--seed", seed, "random seed");
  auto* bve = oracle->add_subcommand("ball-vs-exact", "ball determinant against the exact norm");
  add_run_options(bve, opts);
  auto* heights = oracle->add_subcommand("height-laws", "height identities on random algebraic numbers");
  heights->add_option("--trials", trials, "number of trials");
  heights->add_option("--seed", seed, "random seed");

  std::string cert_path;
  auto* check = app.add_subcommand("check", "re-check a certificate file");
  check->add_option("file", cert_path, "certificate")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*certify) return run_certify(opts);
  if (*check) return run_check(cert_path);
  if (*scan) return run_oracle("valuation-scan", opts, max_m, seed);
  if (*table) return run_oracle("table-sample", opts, samples, seed);
  if (*bve) return run_oracle("ball-vs-exact", opts, 0, seed);
  if (*heights) return run_oracle("height-laws", opts, trials, seed);
  return 2;
}
