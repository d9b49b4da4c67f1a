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

#include "report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "config.hpp"

namespace subcomp {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + name + "' (expected csv|json)");
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

json report_to_json_value(const VerificationReport& r) {
  json j{{"empirical_mean_count", r.empirical_mean_count},
         {"empirical_se", r.empirical_se},
         {"predicted", r.predicted},
         {"predicted_se", r.predicted_se},
         {"z_score", r.z_score},
         {"truncation_bias_bound", r.truncation_bias_bound},
         {"pass", r.pass},
         {"seed", r.seed},
         {"n_paths", r.n_paths},
         {"eps", r.eps},
         {"runtime_seconds", r.runtime_seconds},
         {"schema_version", r.schema_version}};
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

}  // namespace

std::string verification_report_json(const VerificationReport& report) {
  return report_to_json_value(report).dump(2) + "\n";
}

std::string verification_report_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "empirical_mean_count,empirical_se,predicted,predicted_se,z_score,"
         "truncation_bias_bound,pass,seed,n_paths,eps,runtime_seconds,"
         "schema_version\n";
  out << format_double(report.empirical_mean_count) << ','
      << format_double(report.empirical_se) << ','
      << format_double(report.predicted) << ','
      << format_double(report.predicted_se) << ','
      << format_double(report.z_score) << ','
      << format_double(report.truncation_bias_bound) << ','
      << (report.pass ? "true" : "false") << ',' << report.seed << ','
      << report.n_paths << ',' << format_double(report.eps) << ','
      << format_double(report.runtime_seconds) << ',' << report.schema_version
      << "\n";
  return out.str();
}

std::string density_table_csv(const std::vector<DensityRow>& rows) {
  std::ostringstream out;
  out << "x,y,closed_form,quadrature,abs_diff\n";
  for (const DensityRow& r : rows)
    out << format_double(r.x) << ',' << format_double(r.y) << ','
        << format_double(r.closed_form) << ',' << format_double(r.quadrature)
        << ',' << format_double(r.abs_diff) << "\n";
  return out.str();
}

std::string density_table_json(const std::vector<DensityRow>& rows) {
  json arr = json::array();
  for (const DensityRow& r : rows)
    arr.push_back(json{{"x", r.x},
                       {"y", r.y},
                       {"closed_form", r.closed_form},
                       {"quadrature", r.quadrature},
                       {"abs_diff", r.abs_diff}});
  return arr.dump(2) + "\n";
}

std::string simulate_table_csv(const std::vector<SimulatedJumpRow>& rows) {
  std::ostringstream out;
  out << "path,time,size\n";
  for (const SimulatedJumpRow& r : rows)
    out << r.path << ',' << format_double(r.t) << ',' << format_double(r.size)
        << "\n";
  return out.str();
}

std::string simulate_table_json(const std::vector<SimulatedJumpRow>& rows) {
  json arr = json::array();
  for (const SimulatedJumpRow& r : rows)
    arr.push_back(json{{"path", r.path}, {"time", r.t}, {"size", r.size}});
  return arr.dump(2) + "\n";
}

std::string error_object_json(const std::string& code,
                              const std::string& message) {
  return json{{"error", {{"code", code}, {"message", message}}}}.dump(2) + "\n";
}

}  // namespace subcomp
