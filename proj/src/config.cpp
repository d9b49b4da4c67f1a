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

#include "config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace subcomp {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v == "inf" || v == "+inf")
    return std::numeric_limits<double>::infinity();
  if (v == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse number '" + v +
                      "'");
  }
  if (pos != v.size())
    throw ConfigError("config key '" + key + "': trailing characters in '" + v +
                      "'");
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": empty key");
    cfg.set(key, value);
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Config::serialize() const {
  std::ostringstream out;
  for (const auto& [key, value] : entries_) out << key << " = " << value << "\n";
  return out.str();
}

bool Config::has(const std::string& key) const { return find(key).has_value(); }

void Config::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

std::optional<std::string> Config::find(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

std::string Config::get_string(const std::string& key) const {
  const auto v = find(key);
  if (!v) throw ConfigError("missing required config key '" + key + "'");
  return *v;
}

std::string Config::get_string_or(const std::string& key,
                                  const std::string& fallback) const {
  return find(key).value_or(fallback);
}

double Config::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

double Config::get_double_or(const std::string& key, double fallback) const {
  const auto v = find(key);
  return v ? parse_double(key, *v) : fallback;
}

std::uint64_t Config::get_u64(const std::string& key) const {
  const std::string v = trim(get_string(key));
  try {
    std::size_t pos = 0;
    const unsigned long long out = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse integer '" + v +
                      "'");
  }
}

std::uint64_t Config::get_u64_or(const std::string& key,
                                 std::uint64_t fallback) const {
  return has(key) ? get_u64(key) : fallback;
}

int Config::get_int_or(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  const std::uint64_t v = get_u64(key);
  if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw ConfigError("config key '" + key + "': value out of range");
  return static_cast<int>(v);
}

bool Config::get_bool_or(const std::string& key, bool fallback) const {
  const auto v = find(key);
  if (!v) return fallback;
  const std::string s = trim(*v);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + s +
                    "'");
}

std::vector<double> Config::get_double_list(const std::string& key) const {
  std::vector<double> out;
  for (const std::string& part : split(get_string(key), ',')) {
    const std::string p = trim(part);
    if (p.empty()) continue;
    out.push_back(parse_double(key, p));
  }
  if (out.empty())
    throw ConfigError("config key '" + key + "': expected at least one value");
  return out;
}

std::vector<std::pair<double, double>> parse_interval_list(
    const std::string& text) {
  std::vector<std::pair<double, double>> out;
  for (const std::string& part : split(text, ',')) {
    const std::string p = trim(part);
    if (p.empty()) continue;
    const std::size_t colon = p.find(':');
    if (colon == std::string::npos)
      throw ConfigError("interval '" + p + "': expected 'lo:hi'");
    out.emplace_back(parse_double("window", p.substr(0, colon)),
                     parse_double("window", p.substr(colon + 1)));
  }
  return out;
}

}  // namespace subcomp
