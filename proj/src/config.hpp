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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace subcomp {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat key-value run configuration with dotted section keys, e.g.
///   subordinator.alpha = 0.25
/// One scenario per file; '#' starts a comment; later duplicates of a key
/// overwrite the earlier value in place, so serialize(parse(s)) is a
/// fixpoint.
class Config {
 public:
  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  std::string serialize() const;

  bool has(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  std::string get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key,
                            const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double fallback) const;
  std::uint64_t get_u64(const std::string& key) const;
  std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const;
  int get_int_or(const std::string& key, int fallback) const;
  bool get_bool_or(const std::string& key, bool fallback) const;
  /// Comma-separated doubles; "inf"/"-inf" allowed where meaningful.
  std::vector<double> get_double_list(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

 private:
  std::optional<std::string> find(const std::string& key) const;
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Parses an interval union like "0.5:inf, -inf:-0.5" (empty string means
/// the empty window).
std::vector<std::pair<double, double>> parse_interval_list(
    const std::string& text);

}  // namespace subcomp
