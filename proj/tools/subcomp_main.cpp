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

// Command-line front end; talks to the core exclusively through the C API of
// the subcomp shared library.
//
// Exit codes: 0 success (verification passed / table within tolerance),
// 1 gate failure (verification or selftest failed, density out of tolerance),
// 2 usage or configuration error, 3 numeric failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "subcomp/subcomp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGateFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct ConfigDeleter {
  void operator()(subcomp_config* c) const { subcomp_config_free(c); }
};
struct ReportDeleter {
  void operator()(subcomp_report* r) const { subcomp_report_free(r); }
};

using ConfigHandle = std::unique_ptr<subcomp_config, ConfigDeleter>;
using ReportHandle = std::unique_ptr<subcomp_report, ReportDeleter>;

std::string owned_string(char* s) {
  std::string out = s != nullptr ? s : "";
  subcomp_string_free(s);
  return out;
}

const char* status_name(subcomp_status status) {
  switch (status) {
    case SUBCOMP_OK:
      return "ok";
    case SUBCOMP_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case SUBCOMP_ERR_PARSE:
      return "parse_error";
    case SUBCOMP_ERR_IO:
      return "io_error";
    case SUBCOMP_ERR_NUMERIC:
      return "numeric_error";
    case SUBCOMP_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

int exit_code_for(subcomp_status status) {
  switch (status) {
    case SUBCOMP_OK:
      return kExitOk;
    case SUBCOMP_ERR_NUMERIC:
      return kExitNumeric;
    default:
      return kExitUsage;
  }
}

int report_error(subcomp_status status) {
  std::cerr << "{\"error\": {\"code\": \"" << status_name(status)
            << "\", \"message\": \"" << subcomp_last_error() << "\"}}\n";
  if (status == SUBCOMP_ERR_IO || status == SUBCOMP_ERR_PARSE)
    std::cerr << "usage: subcomp <simulate|density|verify|selftest> --config "
                 "<path> [--output <path>] [--format csv|json] [--seed <u64>] "
                 "[--workers <n>]\n";
  return exit_code_for(status);
}

int write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "{\"error\": {\"code\": \"io_error\", \"message\": \"cannot "
                 "write to '"
              << output_path << "'\"}}\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

struct CommonOptions {
  std::string config_path;
  std::string output_path;
  std::string format = "csv";
  std::string seed;
  int workers = 0;
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool want_config,
                const std::string& default_format) {
  opts->format = default_format;
  if (want_config)
    cmd->add_option("--config", opts->config_path, "scenario config file")
        ->required();
  cmd->add_option("--output", opts->output_path,
                  "output file (stdout if omitted)");
  cmd->add_option("--format", opts->format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", opts->seed,
                  "master seed override (precedence: flag > SUBCOMP_SEED > "
                  "config)");
  cmd->add_option("--workers", opts->workers,
                  "worker threads (does not change results)");
}

/// Loads the config and applies the seed/worker override precedence.
subcomp_status load_config(const CommonOptions& opts, ConfigHandle* out) {
  subcomp_config* raw = nullptr;
  subcomp_status status = subcomp_config_load(opts.config_path.c_str(), &raw);
  if (status != SUBCOMP_OK) return status;
  ConfigHandle cfg(raw);

  std::string seed = opts.seed;
  if (seed.empty()) {
    const char* env = std::getenv("SUBCOMP_SEED");
    if (env != nullptr && env[0] != '\0') seed = env;
  }
  if (!seed.empty()) {
    status = subcomp_config_set(cfg.get(), "seed", seed.c_str());
    if (status != SUBCOMP_OK) return status;
  }
  if (opts.workers > 0) {
    status = subcomp_config_set(cfg.get(), "workers",
                                std::to_string(opts.workers).c_str());
    if (status != SUBCOMP_OK) return status;
  }
  *out = std::move(cfg);
  return SUBCOMP_OK;
}

subcomp_format to_format(const std::string& name) {
  return name == "json" ? SUBCOMP_FORMAT_JSON : SUBCOMP_FORMAT_CSV;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subcomp: subordinated compensator evaluation and Monte Carlo "
               "verification"};
  app.require_subcommand(1);

  CommonOptions verify_opts, density_opts, simulate_opts, selftest_opts;
  double corrupt_predicted = 0.0;
  bool coupled = false;
  double perturb_bessel = 0.0;

  CLI::App* verify = app.add_subcommand(
      "verify", "run a verification scenario and emit the report");
  add_common(verify, &verify_opts, true, "json");
  verify->add_option("--corrupt-predicted", corrupt_predicted,
                     "debug: multiply the predicted count by this factor");
  verify->add_flag("--coupled", coupled,
                   "reuse the empirical substreams on the predicted side");

  CLI::App* density = app.add_subcommand(
      "density", "tabulate closed-form vs quadrature compensator densities");
  add_common(density, &density_opts, true, "csv");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "emit simulated jump records of the time-changed process");
  add_common(simulate, &simulate_opts, true, "csv");

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the analytic invariant suite");
  add_common(selftest, &selftest_opts, false, "csv");
  selftest->add_option("--perturb-bessel", perturb_bessel,
                       "debug: offset Bessel values inside the identity check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) {
    ConfigHandle cfg;
    subcomp_status status = load_config(verify_opts, &cfg);
    if (status != SUBCOMP_OK) return report_error(status);
    if (corrupt_predicted > 0.0) {
      status = subcomp_config_set(cfg.get(), "debug.corrupt_predicted",
                                  std::to_string(corrupt_predicted).c_str());
      if (status != SUBCOMP_OK) return report_error(status);
    }
    if (coupled) {
      status = subcomp_config_set(cfg.get(), "verify.coupled", "true");
      if (status != SUBCOMP_OK) return report_error(status);
    }
    subcomp_report* raw = nullptr;
    status = subcomp_run_verify(cfg.get(), &raw);
    if (status != SUBCOMP_OK) return report_error(status);
    ReportHandle report(raw);
    char* text = nullptr;
    status = subcomp_report_render(report.get(), to_format(verify_opts.format),
                                   &text);
    if (status != SUBCOMP_OK) return report_error(status);
    const int wrote = write_output(owned_string(text), verify_opts.output_path);
    if (wrote != kExitOk) return wrote;
    return subcomp_report_pass(report.get()) ? kExitOk : kExitGateFailed;
  }

  if (density->parsed()) {
    ConfigHandle cfg;
    subcomp_status status = load_config(density_opts, &cfg);
    if (status != SUBCOMP_OK) return report_error(status);
    char* text = nullptr;
    int within = 0;
    status = subcomp_run_density(cfg.get(), to_format(density_opts.format),
                                 &text, &within);
    if (status != SUBCOMP_OK) return report_error(status);
    const int wrote = write_output(owned_string(text), density_opts.output_path);
    if (wrote != kExitOk) return wrote;
    return within != 0 ? kExitOk : kExitGateFailed;
  }

  if (simulate->parsed()) {
    ConfigHandle cfg;
    subcomp_status status = load_config(simulate_opts, &cfg);
    if (status != SUBCOMP_OK) return report_error(status);
    char* text = nullptr;
    status =
        subcomp_run_simulate(cfg.get(), to_format(simulate_opts.format), &text);
    if (status != SUBCOMP_OK) return report_error(status);
    return write_output(owned_string(text), simulate_opts.output_path);
  }

  // selftest
  char* table = nullptr;
  int all_pass = 0;
  const subcomp_status status =
      subcomp_run_selftest(perturb_bessel, &table, &all_pass);
  if (status != SUBCOMP_OK) return report_error(status);
  const int wrote = write_output(owned_string(table), selftest_opts.output_path);
  if (wrote != kExitOk) return wrote;
  return all_pass != 0 ? kExitOk : kExitGateFailed;
}
