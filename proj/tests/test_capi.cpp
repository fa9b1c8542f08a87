#include <doctest.h>
#include <singmod/singmod.h>

#include <string>

TEST_CASE("version and config setters") {
  CHECK(std::string(sm_version()) == "1.0.0");
  sm_config* cfg = sm_config_create();
  REQUIRE(cfg != nullptr);
  CHECK(sm_config_set_case(cfg, "23") == SM_OK);
  CHECK(sm_config_set_case(cfg, "47") == SM_ERR_USAGE);
  CHECK(std::string(sm_last_error()).find("23, 31 or both") != std::string::npos);
  CHECK(sm_config_set_precision(cfg, 8) == SM_ERR_USAGE);
  CHECK(sm_config_set_jobs(cfg, 0) == SM_ERR_USAGE);
  CHECK(sm_config_set_prime_limit(cfg, 7) == SM_ERR_USAGE);
  CHECK(sm_config_set_case(nullptr, "23") == SM_ERR_USAGE);
  sm_config_destroy(cfg);
}

TEST_CASE("precision above cap is a usage error") {
  sm_config* cfg = sm_config_create();
  sm_config_set_precision(cfg, 1024);
  sm_config_set_precision_cap(cfg, 512);
  sm_result* res = nullptr;
  CHECK(sm_certify(cfg, &res) == SM_ERR_USAGE);
  CHECK(res == nullptr);
  CHECK(std::string(sm_last_error_stage()) == "cli");
  sm_config_destroy(cfg);
}

TEST_CASE("unknown oracle and bad certificates") {
  sm_config* cfg = sm_config_create();
  sm_report* rep = nullptr;
  CHECK(sm_oracle("nope", cfg, 0, 0, &rep) == SM_ERR_USAGE);
  CHECK(rep == nullptr);
  CHECK(sm_check_certificate("{", &rep) == SM_ERR_USAGE);
  CHECK(sm_check_certificate("{\"schema\": \"singmod-certificate/0\"}", &rep) == SM_ERR_USAGE);
  CHECK(std::string(sm_last_error()).find("unknown certificate schema") != std::string::npos);
  sm_config_destroy(cfg);
}

TEST_CASE("height-laws oracle through the C API") {
  sm_config* cfg = sm_config_create();
  sm_report* rep = nullptr;
  CHECK(sm_oracle("height-laws", cfg, 5, 11, &rep) == SM_OK);
  REQUIRE(rep != nullptr);
  CHECK(sm_report_total(rep) == 5);
  CHECK(sm_report_passed(rep) == 5);
  CHECK(std::string(sm_report_text(rep)).find("height-laws: 5/5") != std::string::npos);
  sm_report_destroy(rep);
  sm_config_destroy(cfg);
}
