#include "singmod/singmod.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "certificate.hpp"
#include "errors.hpp"
#include "oracles.hpp"

struct sm_config {
  singmod::RunConfig run;
};

struct sm_result {
  std::string certificate;
  bool proven = false;
  std::vector<std::string> diagnostics;
};

struct sm_report {
  long passed = 0;
  long total = 0;
  std::string text;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_stage;

void set_error(const std::string& stage, const std::string& what) {
  g_stage = stage;
  g_error = what;
}

void clear_error() {
  g_stage.clear();
  g_error.clear();
}

template <typename F>
sm_status guarded(F&& fn) {
  clear_error();
  try {
    return fn();
  } catch (const singmod::InvalidArgument& e) {
    set_error(e.stage(), e.what());
    return SM_ERR_USAGE;
  } catch (const singmod::InvariantViolation& e) {
    set_error(e.stage(), e.what());
    return SM_ERR_INVARIANT;
  } catch (const singmod::PrecisionError& e) {
    set_error(e.stage(), e.what());
    return SM_ERR_PRECISION;
  } catch (const singmod::Error& e) {
    set_error(e.stage(), e.what());
    return SM_ERR_INTERNAL;
  } catch (const std::bad_alloc&) {
    set_error("", "out of memory");
    return SM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error("", e.what());
    return SM_ERR_INTERNAL;
  }
}

sm_status usage(const char* what) {
  set_error("cli", what);
  return SM_ERR_USAGE;
}

void append_report(sm_report& rep, const singmod::OracleReport& r) {
  rep.passed += r.passed;
  rep.total += r.total;
  rep.text += r.summary() + "\n";
  for (const auto& line : r.lines) rep.text += "  " + line + "\n";
  for (const auto& f : r.failures) rep.text += "  mismatch: " + f + "\n";
}

std::vector<std::pair<long, long>> residual_pairs(const singmod::CaseData& c) {
  using namespace singmod;
  return residual_set(residual_rows(master_inputs(c), c2_table(c)));
}

}  // namespace

extern "C" {

const char* sm_version(void) { return singmod::kToolVersion; }
const char* sm_last_error(void) { return g_error.c_str(); }
const char* sm_last_error_stage(void) { return g_stage.c_str(); }

sm_config* sm_config_create(void) {
  try {
    return new sm_config();
  } catch (...) {
    set_error("", "out of memory");
    return nullptr;
  }
}

void sm_config_destroy(sm_config* cfg) { delete cfg; }

sm_status sm_config_set_case(sm_config* cfg, const char* selector) {
  if (!cfg || !selector) return usage("null argument");
  return guarded([&] {
    singmod::selected_cases(selector);
    cfg->run.case_selector = selector;
    return SM_OK;
  });
}

sm_status sm_config_set_precision(sm_config* cfg, long bits) {
  if (!cfg) return usage("null argument");
  if (bits < 64) return usage("precision must be at least 64 bits");
  cfg->run.case_config.precision = bits;
  return SM_OK;
}

sm_status sm_config_set_precision_cap(sm_config* cfg, long bits) {
  if (!cfg) return usage("null argument");
  if (bits < 64) return usage("precision cap must be at least 64 bits");
  cfg->run.case_config.precision_cap = bits;
  return SM_OK;
}

sm_status sm_config_set_prime_limit(sm_config* cfg, long limit) {
  if (!cfg) return usage("null argument");
  if (limit < 11) return usage("prime limit must be at least 11");
  cfg->run.case_config.prime_limit = limit;
  return SM_OK;
}

sm_status sm_config_set_jobs(sm_config* cfg, unsigned jobs) {
  if (!cfg) return usage("null argument");
  if (jobs == 0) return usage("jobs must be positive");
  cfg->run.jobs = jobs;
  return SM_OK;
}

sm_status sm_config_set_cache_dir(sm_config* cfg, const char* dir) {
  if (!cfg || !dir) return usage("null argument");
  cfg->run.case_config.cache_dir = dir;
  return SM_OK;
}

sm_status sm_certify(const sm_config* cfg, sm_result** out) {
  if (!cfg || !out) return usage("null argument");
  *out = nullptr;
  return guarded([&] {
    singmod::CertifyResult r = singmod::certify(cfg->run);
    auto* res = new sm_result();
    res->certificate = singmod::certificate_text(r.certificate);
    res->proven = r.proven;
    res->diagnostics = std::move(r.diagnostics);
    *out = res;
    return r.proven ? SM_OK : SM_INCOMPLETE;
  });
}

const char* sm_result_certificate(const sm_result* res) { return res ? res->certificate.c_str() : ""; }
int sm_result_proven(const sm_result* res) { return res && res->proven ? 1 : 0; }
size_t sm_result_diagnostic_count(const sm_result* res) { return res ? res->diagnostics.size() : 0; }

const char* sm_result_diagnostic(const sm_result* res, size_t index) {
  if (!res || index >= res->diagnostics.size()) return "";
  return res->diagnostics[index].c_str();
}

void sm_result_destroy(sm_result* res) { delete res; }

sm_status sm_oracle(const char* name, const sm_config* cfg, unsigned long param, unsigned long long seed,
                    sm_report** out) {
  if (!name || !cfg || !out) return usage("null argument");
  *out = nullptr;
  const std::string oracle = name;
  if (oracle != "valuation-scan" && oracle != "table-sample" && oracle != "ball-vs-exact" &&
      oracle != "height-laws") {
    return usage("unknown oracle (valuation-scan, table-sample, ball-vs-exact, height-laws)");
  }
  return guarded([&] {
    using namespace singmod;
    validate_config(cfg->run);
    auto rep = std::make_unique<sm_report>();
    if (oracle == "height-laws") {
      append_report(*rep, height_laws_oracle(static_cast<unsigned>(param), seed));
    } else {
      for (const CaseId& id : selected_cases(cfg->run.case_selector)) {
        CaseData c = build_case(id, cfg->run.case_config);
        if (oracle == "valuation-scan") {
          append_report(*rep, valuation_scan_oracle(c, param));
        } else if (oracle == "table-sample") {
          append_report(*rep, table_sample_oracle(c, static_cast<unsigned>(param), seed));
        } else {
          append_report(*rep, ball_vs_exact_oracle(c, residual_pairs(c), cfg->run.jobs));
        }
      }
    }
    bool ok = rep->total > 0 && rep->passed == rep->total;
    *out = rep.release();
    return ok ? SM_OK : SM_INCOMPLETE;
  });
}

sm_status sm_check_certificate(const char* text, sm_report** out) {
  if (!text || !out) return usage("null argument");
  *out = nullptr;
  return guarded([&] {
    singmod::Json cert = singmod::load_certificate(text);
    singmod::RecheckReport r = singmod::recheck_certificate(cert);
    auto rep = std::make_unique<sm_report>();
    rep->total = static_cast<long>(cert["cases"].size());
    rep->passed = r.ok ? rep->total : 0;
    rep->text = r.ok ? "certificate re-checked: " + cert["verdict"].get<std::string>() + "\n"
                     : "certificate re-check failed\n";
    for (const auto& f : r.failures) rep->text += "  " + f + "\n";
    *out = rep.release();
    return r.ok ? SM_OK : SM_INCOMPLETE;
  });
}

long sm_report_passed(const sm_report* rep) { return rep ? rep->passed : 0; }
long sm_report_total(const sm_report* rep) { return rep ? rep->total : 0; }
const char* sm_report_text(const sm_report* rep) { return rep ? rep->text.c_str() : ""; }
void sm_report_destroy(sm_report* rep) { delete rep; }

}  // extern "C"
