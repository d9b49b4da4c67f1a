// Copyright 2026 the subcomp authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exercises the shared-library C surface: handles, error codes, and that the
// C results agree with the C++ core.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "subcomp/subcomp.h"

namespace {

const char* kConfigText =
    "kernel.type = skew_bm\n"
    "kernel.beta = 0\n"
    "subordinator.c = 1\n"
    "subordinator.lambda = 1\n"
    "subordinator.alpha = 0\n"
    "verify.window = 0.5:inf\n"
    "verify.n_paths = 1000\n"
    "seed = 321\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  subcomp_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and error-state basics") {
  CHECK(std::strlen(subcomp_version()) > 0);
  double out = 0.0;
  CHECK(subcomp_bessel_k(0.5, 1.0, &out) == SUBCOMP_OK);
  CHECK(std::strlen(subcomp_last_error()) == 0);
}

TEST_CASE("bessel through the C surface") {
  double out = 0.0;
  REQUIRE(subcomp_bessel_k(0.5, 1.0, &out) == SUBCOMP_OK);
  CHECK(out == doctest::Approx(std::sqrt(M_PI / 2.0) * std::exp(-1.0))
                   .epsilon(1e-12));
  CHECK(subcomp_bessel_k(0.5, -1.0, &out) == SUBCOMP_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(subcomp_last_error()) > 0);
  CHECK(subcomp_bessel_k(0.5, 1.0, nullptr) == SUBCOMP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("closed forms through the C surface") {
  double closed = 0.0, quad = 0.0, gamma_form = 0.0, vg = 0.0;
  REQUIRE(subcomp_skew_ts_density(0.3, 0.8, 0.5, 1.0, 1.0, 0.25, &closed) ==
          SUBCOMP_OK);
  REQUIRE(subcomp_skew_ts_density_quadrature(0.3, 0.8, 0.5, 1.0, 1.0, 0.25,
                                             &quad) == SUBCOMP_OK);
  CHECK(std::fabs(quad - closed) <= 1e-6 * closed);

  REQUIRE(subcomp_skew_ts_density(0.3, 0.8, 0.5, 1.0, 1.0, 0.0, &closed) ==
          SUBCOMP_OK);
  REQUIRE(subcomp_skew_gamma_density(0.3, 0.8, 0.5, 1.0, 1.0, &gamma_form) ==
          SUBCOMP_OK);
  CHECK(closed == doctest::Approx(gamma_form).epsilon(1e-12));

  REQUIRE(subcomp_vg_levy_density(1.0, 1.0, 0.5, &vg) == SUBCOMP_OK);
  CHECK(vg == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(subcomp_vg_levy_density(0.0, 1.0, 0.5, &vg) ==
        SUBCOMP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("config lifecycle: parse, set, get, serialize") {
  subcomp_config* cfg = nullptr;
  REQUIRE(subcomp_config_parse(kConfigText, &cfg) == SUBCOMP_OK);
  char* value = nullptr;
  REQUIRE(subcomp_config_get(cfg, "seed", &value) == SUBCOMP_OK);
  CHECK(take(value) == "321");
  CHECK(subcomp_config_get(cfg, "absent.key", &value) ==
        SUBCOMP_ERR_INVALID_ARGUMENT);
  REQUIRE(subcomp_config_set(cfg, "seed", "17") == SUBCOMP_OK);
  char* text = nullptr;
  REQUIRE(subcomp_config_serialize(cfg, &text) == SUBCOMP_OK);
  const std::string serialized = take(text);
  CHECK(serialized.find("seed = 17") != std::string::npos);

  subcomp_config* reparsed = nullptr;
  REQUIRE(subcomp_config_parse(serialized.c_str(), &reparsed) == SUBCOMP_OK);
  char* text2 = nullptr;
  REQUIRE(subcomp_config_serialize(reparsed, &text2) == SUBCOMP_OK);
  CHECK(take(text2) == serialized);
  subcomp_config_free(reparsed);
  subcomp_config_free(cfg);
}

TEST_CASE("config error codes") {
  subcomp_config* cfg = nullptr;
  CHECK(subcomp_config_load("/nonexistent/path.cfg", &cfg) == SUBCOMP_ERR_IO);
  CHECK(std::strlen(subcomp_last_error()) > 0);
  CHECK(subcomp_config_parse("not a config", &cfg) == SUBCOMP_ERR_PARSE);
  CHECK(subcomp_config_parse(nullptr, &cfg) == SUBCOMP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify run through the C surface") {
  subcomp_config* cfg = nullptr;
  REQUIRE(subcomp_config_parse(kConfigText, &cfg) == SUBCOMP_OK);
  subcomp_report* report = nullptr;
  REQUIRE(subcomp_run_verify(cfg, &report) == SUBCOMP_OK);
  CHECK(subcomp_report_pass(report) == 1);
  CHECK(std::fabs(subcomp_report_z_score(report)) <= 4.0);
  CHECK(subcomp_report_empirical_mean(report) > 0.0);
  CHECK(subcomp_report_empirical_se(report) > 0.0);
  CHECK(subcomp_report_predicted(report) > 0.0);
  CHECK(subcomp_report_predicted_se(report) == 0.0);
  CHECK(subcomp_report_bias_bound(report) >= 0.0);
  CHECK(subcomp_report_runtime_seconds(report) > 0.0);

  char* json = nullptr;
  REQUIRE(subcomp_report_render(report, SUBCOMP_FORMAT_JSON, &json) ==
          SUBCOMP_OK);
  const std::string rendered = take(json);
  CHECK(rendered.find("\"empirical_mean_count\"") != std::string::npos);
  CHECK(rendered.find("\"schema_version\": 1") != std::string::npos);
  char* csv = nullptr;
  REQUIRE(subcomp_report_render(report, SUBCOMP_FORMAT_CSV, &csv) == SUBCOMP_OK);
  CHECK(take(csv).rfind("empirical_mean_count,", 0) == 0);

  subcomp_report_free(report);

  // invalid scenario surfaces as an argument error, not a crash
  REQUIRE(subcomp_config_set(cfg, "kernel.beta", "7") == SUBCOMP_OK);
  CHECK(subcomp_run_verify(cfg, &report) == SUBCOMP_ERR_INVALID_ARGUMENT);
  subcomp_config_free(cfg);
}

TEST_CASE("density and simulate runs through the C surface") {
  subcomp_config* cfg = nullptr;
  REQUIRE(subcomp_config_parse(kConfigText, &cfg) == SUBCOMP_OK);
  REQUIRE(subcomp_config_set(cfg, "density.y_min", "-2") == SUBCOMP_OK);
  REQUIRE(subcomp_config_set(cfg, "density.y_max", "2") == SUBCOMP_OK);
  REQUIRE(subcomp_config_set(cfg, "density.n_points", "9") == SUBCOMP_OK);

  char* text = nullptr;
  int within = 0;
  REQUIRE(subcomp_run_density(cfg, SUBCOMP_FORMAT_CSV, &text, &within) ==
          SUBCOMP_OK);
  CHECK(within == 1);
  CHECK(take(text).rfind("x,y,", 0) == 0);

  REQUIRE(subcomp_config_set(cfg, "simulate.n_paths", "5") == SUBCOMP_OK);
  REQUIRE(subcomp_run_simulate(cfg, SUBCOMP_FORMAT_JSON, &text) == SUBCOMP_OK);
  CHECK(take(text).find("\"size\"") != std::string::npos);
  subcomp_config_free(cfg);
}

TEST_CASE("selftest through the C surface with the perturbation hook") {
  char* table = nullptr;
  int all_pass = -1;
  REQUIRE(subcomp_run_selftest(1e-3, &table, &all_pass) == SUBCOMP_OK);
  const std::string rows = take(table);
  CHECK(all_pass == 0);
  CHECK(rows.find("[FAIL] bessel_integral_identity") != std::string::npos);
}
