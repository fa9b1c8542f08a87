#ifndef SINGMOD_SINGMOD_H
#define SINGMOD_SINGMOD_H

/* C interface of the singmod certification engine. All handles are opaque;
   every call that can fail returns an sm_status and leaves a message in
   sm_last_error() on the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#define SM_API __declspec(dllexport)
#else
#define SM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sm_status {
  SM_OK = 0,            /* success; for certify and oracles: PROVEN / all checks pass */
  SM_INCOMPLETE = 1,    /* ran to the end without a proof, or an oracle mismatch */
  SM_ERR_USAGE = 2,     /* invalid configuration, argument or certificate */
  SM_ERR_INVARIANT = 3, /* an internal invariant failed */
  SM_ERR_PRECISION = 4, /* precision cap reached before a decision */
  SM_ERR_INTERNAL = 5   /* anything else */
} sm_status;

typedef struct sm_config sm_config;
typedef struct sm_result sm_result;
typedef struct sm_report sm_report;

SM_API const char* sm_version(void);
/* Message and stage of the last failure on this thread ("" if none). */
SM_API const char* sm_last_error(void);
SM_API const char* sm_last_error_stage(void);

/* Defaults: case "both", precision 256, cap 4096, prime limit 200, 1 job. */
SM_API sm_config* sm_config_create(void);
SM_API void sm_config_destroy(sm_config* cfg);
SM_API sm_status sm_config_set_case(sm_config* cfg, const char* selector); /* "23", "31" or "both" */
SM_API sm_status sm_config_set_precision(sm_config* cfg, long bits);
SM_API sm_status sm_config_set_precision_cap(sm_config* cfg, long bits);
SM_API sm_status sm_config_set_prime_limit(sm_config* cfg, long limit);
SM_API sm_status sm_config_set_jobs(sm_config* cfg, unsigned jobs);
SM_API sm_status sm_config_set_cache_dir(sm_config* cfg, const char* dir);

/* Runs the full pipeline. On SM_OK or SM_INCOMPLETE *out holds the result. */
SM_API sm_status sm_certify(const sm_config* cfg, sm_result** out);
SM_API const char* sm_result_certificate(const sm_result* res); /* JSON text */
SM_API int sm_result_proven(const sm_result* res);
SM_API size_t sm_result_diagnostic_count(const sm_result* res);
SM_API const char* sm_result_diagnostic(const sm_result* res, size_t index);
SM_API void sm_result_destroy(sm_result* res);

/* Oracles: "valuation-scan" (param = max m), "table-sample" (param = sample
   count), "ball-vs-exact" (param unused), "height-laws" (param = trials).
   Runs on the configured case(s); height-laws ignores the case. On SM_OK or
   SM_INCOMPLETE *out holds the report. */
SM_API sm_status sm_oracle(const char* name, const sm_config* cfg, unsigned long param, unsigned long long seed,
                    sm_report** out);

/* Loads a certificate and re-checks it without regenerating it. SM_ERR_USAGE
   for unreadable input or an unknown schema, SM_INCOMPLETE when a re-check
   fails (report lists the failures). */
SM_API sm_status sm_check_certificate(const char* text, sm_report** out);

SM_API long sm_report_passed(const sm_report* rep);
SM_API long sm_report_total(const sm_report* rep);
SM_API const char* sm_report_text(const sm_report* rep);
SM_API void sm_report_destroy(sm_report* rep);

#ifdef __cplusplus
}
#endif

#endif
