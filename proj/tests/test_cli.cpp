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

// End-to-end checks of the installed command-line binary: exit-code contract,
// output formats, seed precedence.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SUBCOMP_CLI_PATH
#error "SUBCOMP_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string out_path =
      std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
      "/subcomp_cli_out_" + std::to_string(::getpid()) + ".txt";
  const std::string cmd = env + " " + std::string(SUBCOMP_CLI_PATH) + " " +
                          args + " > " + out_path + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.stdout_text = buf.str();
  std::remove(out_path.c_str());
  return result;
}

std::string write_config(const std::string& name, const std::string& body) {
  const std::string path =
      std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
      "/" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

const char* kVgConfig =
    "kernel.type = skew_bm\n"
    "kernel.beta = 0\n"
    "subordinator.c = 1\n"
    "subordinator.lambda = 1\n"
    "subordinator.alpha = 0\n"
    "verify.window = 0.5:inf\n"
    "verify.n_paths = 2000\n"
    "seed = 9001\n"
    "workers = 2\n";

}  // namespace

TEST_CASE("missing config file exits 2") {
  const RunResult r = run_cli("verify --config /does/not/exist.cfg");
  CHECK(r.exit_code == 2);
}

TEST_CASE("unknown arguments exit 2") {
  CHECK(run_cli("verify").exit_code == 2);          // --config required
  CHECK(run_cli("frobnicate").exit_code == 2);      // unknown subcommand
}

TEST_CASE("verify: pass yields exit 0 and schema-complete JSON") {
  const std::string cfg = write_config("cli_vg.cfg", kVgConfig);
  const RunResult r = run_cli("verify --config " + cfg + " --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.stdout_text);
  for (const char* key :
       {"empirical_mean_count", "empirical_se", "predicted", "predicted_se",
        "z_score", "truncation_bias_bound", "pass", "seed", "n_paths", "eps",
        "runtime_seconds", "schema_version"})
    CHECK(j.contains(key));
  CHECK(j["pass"].get<bool>());
  CHECK(j["seed"].get<std::uint64_t>() == 9001);
}

TEST_CASE("verify: corrupted prediction exits 1") {
  const std::string cfg = write_config("cli_vg.cfg", kVgConfig);
  const RunResult r =
      run_cli("verify --config " + cfg + " --corrupt-predicted 1.2");
  CHECK(r.exit_code == 1);
  // the exit contract is stable across output formats
  const RunResult csv_fail =
      run_cli("verify --config " + cfg + " --corrupt-predicted 1.2 " +
              "--format csv");
  CHECK(csv_fail.exit_code == 1);
}

TEST_CASE("verify: csv format renders a single data row and exits 0") {
  const std::string cfg = write_config("cli_vg.cfg", kVgConfig);
  const RunResult r = run_cli("verify --config " + cfg + " --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.rfind("empirical_mean_count,", 0) == 0);
}

TEST_CASE("seed precedence: flag > env > config") {
  const std::string cfg = write_config("cli_vg.cfg", kVgConfig);
  const RunResult from_env =
      run_cli("verify --config " + cfg, "SUBCOMP_SEED=555");
  CHECK(nlohmann::json::parse(from_env.stdout_text)["seed"] == 555);
  const RunResult from_flag =
      run_cli("verify --config " + cfg + " --seed 777", "SUBCOMP_SEED=555");
  CHECK(nlohmann::json::parse(from_flag.stdout_text)["seed"] == 777);
  const RunResult from_config = run_cli("verify --config " + cfg);
  CHECK(nlohmann::json::parse(from_config.stdout_text)["seed"] == 9001);
}

TEST_CASE("worker count does not change the report") {
  const std::string cfg = write_config("cli_vg.cfg", kVgConfig);
  auto strip_runtime = [](std::string text) {
    auto j = nlohmann::json::parse(text);
    j.erase("runtime_seconds");
    return j.dump();
  };
  const RunResult one = run_cli("verify --config " + cfg + " --workers 1");
  const RunResult four = run_cli("verify --config " + cfg + " --workers 4");
  CHECK(strip_runtime(one.stdout_text) == strip_runtime(four.stdout_text));
}

TEST_CASE("density: csv table with header, exit 0 within tolerance") {
  const std::string cfg = write_config(
      "cli_density.cfg", std::string(kVgConfig) +
                             "kernel.beta = 0.5\n"
                             "subordinator.alpha = 0.25\n"
                             "density.y_min = -2\n"
                             "density.y_max = 2\n"
                             "density.n_points = 11\n"
                             "density.x_values = 0, 0.5\n");
  const RunResult r = run_cli("density --config " + cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.rfind("x,y,closed_form,quadrature,abs_diff", 0) == 0);
  // 17-significant-digit column rendering: some field carries a long mantissa
  std::size_t longest_field = 0, field_start = 0;
  for (std::size_t i = 0; i <= r.stdout_text.size(); ++i) {
    if (i == r.stdout_text.size() || r.stdout_text[i] == ',' ||
        r.stdout_text[i] == '\n') {
      longest_field = std::max(longest_field, i - field_start);
      field_start = i + 1;
    }
  }
  CHECK(longest_field >= 17);
}

TEST_CASE("simulate: output lands in the requested file") {
  const std::string cfg = write_config(
      "cli_sim.cfg", std::string(kVgConfig) + "simulate.n_paths = 5\n");
  const std::string out =
      std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
      "/cli_sim_rows.csv";
  const RunResult r =
      run_cli("simulate --config " + cfg + " --output " + out);
  CHECK(r.exit_code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header == "path,time,size");
  std::remove(out.c_str());
}

TEST_CASE("selftest runs clean and the debug hook trips the identity row") {
  CHECK(run_cli("selftest").exit_code == 0);
  const RunResult broken = run_cli("selftest --perturb-bessel 1e-3");
  CHECK(broken.exit_code == 1);
  CHECK(broken.stdout_text.find("[FAIL] bessel_integral_identity") !=
        std::string::npos);
}
