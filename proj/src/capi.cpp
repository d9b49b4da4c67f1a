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

#include "subcomp/subcomp.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "config.hpp"
#include "run.hpp"
#include "specfun.hpp"

struct subcomp_config {
  subcomp::Config cfg;
};

struct subcomp_report {
  subcomp::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

subcomp_status fail(subcomp_status code, const char* message) {
  g_last_error = message;
  return code;
}

/// Runs fn, translating C++ exceptions into status codes.
template <typename Fn>
subcomp_status guarded(const Fn& fn) {
  try {
    fn();
    g_last_error.clear();
    return SUBCOMP_OK;
  } catch (const subcomp::IoError& e) {
    g_last_error = e.what();
    return SUBCOMP_ERR_IO;
  } catch (const subcomp::ConfigError& e) {
    g_last_error = e.what();
    return SUBCOMP_ERR_PARSE;
  } catch (const subcomp::QuadratureError& e) {
    g_last_error = e.what();
    return SUBCOMP_ERR_NUMERIC;
  } catch (const subcomp::SamplingError& e) {
    g_last_error = e.what();
    return SUBCOMP_ERR_NUMERIC;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return SUBCOMP_ERR_INVALID_ARGUMENT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SUBCOMP_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SUBCOMP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SUBCOMP_ERR_INTERNAL;
  }
}

subcomp::OutputFormat to_format(subcomp_format format) {
  return format == SUBCOMP_FORMAT_JSON ? subcomp::OutputFormat::kJson
                                       : subcomp::OutputFormat::kCsv;
}

}  // namespace

extern "C" {

const char* subcomp_version(void) { return "0.1.0"; }

const char* subcomp_last_error(void) { return g_last_error.c_str(); }

void subcomp_string_free(char* s) { std::free(s); }

subcomp_status subcomp_config_parse(const char* text, subcomp_config** out) {
  if (text == nullptr || out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new subcomp_config{subcomp::Config::parse(text)}; });
}

subcomp_status subcomp_config_load(const char* path, subcomp_config** out) {
  if (path == nullptr || out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new subcomp_config{subcomp::Config::load(path)}; });
}

subcomp_status subcomp_config_set(subcomp_config* cfg, const char* key,
                                  const char* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { cfg->cfg.set(key, value); });
}

subcomp_status subcomp_config_get(const subcomp_config* cfg, const char* key,
                                  char** value_out) {
  if (cfg == nullptr || key == nullptr || value_out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  if (!cfg->cfg.has(key))
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "config key not present");
  return guarded([&] { *value_out = dup_string(cfg->cfg.get_string(key)); });
}

subcomp_status subcomp_config_serialize(const subcomp_config* cfg,
                                        char** text_out) {
  if (cfg == nullptr || text_out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *text_out = dup_string(cfg->cfg.serialize()); });
}

void subcomp_config_free(subcomp_config* cfg) { delete cfg; }

subcomp_status subcomp_bessel_k(double v, double x, double* out) {
  if (out == nullptr) return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] { *out = subcomp::bessel_k(v, x); });
}

subcomp_status subcomp_skew_ts_density(double x, double y, double beta,
                                       double c, double lambda, double alpha,
                                       double* out) {
  if (out == nullptr) return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    *out = subcomp::skew_ts_closed_form(x, y, subcomp::SkewParams{beta},
                                        {c, lambda, alpha});
  });
}

subcomp_status subcomp_skew_gamma_density(double x, double y, double beta,
                                          double c, double lambda,
                                          double* out) {
  if (out == nullptr) return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    *out = subcomp::skew_gamma_closed_form(x, y, subcomp::SkewParams{beta}, c,
                                           lambda);
  });
}

subcomp_status subcomp_vg_levy_density(double y, double c, double lambda,
                                       double* out) {
  if (out == nullptr) return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] { *out = subcomp::vg_levy_density(y, c, lambda); });
}

subcomp_status subcomp_skew_ts_density_quadrature(double x, double y,
                                                  double beta, double c,
                                                  double lambda, double alpha,
                                                  double* out) {
  if (out == nullptr) return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    const subcomp::SkewBrownianKernel kernel(subcomp::SkewParams{beta});
    subcomp::SubordinatorSpec spec;
    spec.params = {c, lambda, alpha};
    *out = subcomp::theorem_density_quadrature(x, y, kernel, spec);
  });
}

subcomp_status subcomp_run_verify(const subcomp_config* cfg,
                                  subcomp_report** out) {
  if (cfg == nullptr || out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { *out = new subcomp_report{subcomp::verify_from_config(cfg->cfg)}; });
}

double subcomp_report_empirical_mean(const subcomp_report* r) {
  return r->report.empirical_mean_count;
}
double subcomp_report_empirical_se(const subcomp_report* r) {
  return r->report.empirical_se;
}
double subcomp_report_predicted(const subcomp_report* r) {
  return r->report.predicted;
}
double subcomp_report_predicted_se(const subcomp_report* r) {
  return r->report.predicted_se;
}
double subcomp_report_z_score(const subcomp_report* r) {
  return r->report.z_score;
}
double subcomp_report_bias_bound(const subcomp_report* r) {
  return r->report.truncation_bias_bound;
}
double subcomp_report_runtime_seconds(const subcomp_report* r) {
  return r->report.runtime_seconds;
}
int subcomp_report_pass(const subcomp_report* r) {
  return r->report.pass ? 1 : 0;
}

subcomp_status subcomp_report_render(const subcomp_report* r,
                                     subcomp_format format, char** text_out) {
  if (r == nullptr || text_out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *text_out = dup_string(format == SUBCOMP_FORMAT_JSON
                               ? subcomp::verification_report_json(r->report)
                               : subcomp::verification_report_csv(r->report));
  });
}

void subcomp_report_free(subcomp_report* r) { delete r; }

subcomp_status subcomp_run_density(const subcomp_config* cfg,
                                   subcomp_format format, char** text_out,
                                   int* within_tolerance_out) {
  if (cfg == nullptr || text_out == nullptr || within_tolerance_out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const subcomp::CommandOutput out =
        subcomp::run_density_command(cfg->cfg, to_format(format));
    *text_out = dup_string(out.text);
    *within_tolerance_out = out.gate ? 1 : 0;
  });
}

subcomp_status subcomp_run_simulate(const subcomp_config* cfg,
                                    subcomp_format format, char** text_out) {
  if (cfg == nullptr || text_out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *text_out =
        dup_string(subcomp::run_simulate_command(cfg->cfg, to_format(format)).text);
  });
}

subcomp_status subcomp_run_selftest(double perturb_bessel, char** table_out,
                                    int* all_pass_out) {
  if (table_out == nullptr || all_pass_out == nullptr)
    return fail(SUBCOMP_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const subcomp::CommandOutput out =
        subcomp::run_selftest_command(perturb_bessel);
    *table_out = dup_string(out.text);
    *all_pass_out = out.gate ? 1 : 0;
  });
}

}  // extern "C"
