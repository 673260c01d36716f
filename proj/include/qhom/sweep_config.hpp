// Copyright 2026 The qhom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qhom/scenarios.hpp"

namespace qhom {

/// Parsed sweep file. Grammar: one `key = value[, value...]` pair per line,
/// `#` starts a comment, blank lines ignored. List-valued keys (eta, N,
/// gamma, direction, mode) expand into a Cartesian product; the remaining
/// keys are scalars. Required keys: eta, N, direction, mode. A key given an
/// empty value list yields an empty sweep.
struct SweepSpec {
  std::vector<double> etas;
  std::vector<int> N_values;
  std::vector<double> gammas{0.0};
  std::vector<TaskDirection> directions;
  std::vector<RestMode> modes;
  int n_max = 50;
  std::uint64_t seed = 0;
  int capacity_cap = default_qubit_cap;
};

namespace detail {

inline std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] inline void fail_at(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "sweep config line " << line << ": " << what;
  throw parse_error(msg.str());
}

inline std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  std::istringstream in(value);
  while (std::getline(in, current, ',')) {
    current = strip(current);
    if (!current.empty()) items.push_back(current);
  }
  return items;
}

inline double parse_double(const std::string& s, int line,
                           const std::string& key) {
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size())
    fail_at(line, "field '" + key + "': expected a number, got '" + s + "'");
  return v;
}

inline long parse_int(const std::string& s, int line, const std::string& key) {
  long v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size())
    fail_at(line, "field '" + key + "': expected an integer, got '" + s + "'");
  return v;
}

inline TaskDirection parse_direction(const std::string& s, int line) {
  if (s == "T") return TaskDirection::T;
  if (s == "T_transpose") return TaskDirection::T_transpose;
  fail_at(line, "field 'direction': expected T or T_transpose, got '" + s + "'");
}

inline RestMode parse_mode(const std::string& s, int line) {
  if (s == "entangled") return RestMode::entangled;
  if (s == "separable") return RestMode::separable;
  if (s == "diagonal_correlated") return RestMode::diagonal_correlated;
  if (s == "analytic_approx") return RestMode::analytic_approx;
  fail_at(line, "field 'mode': unknown mode '" + s + "'");
}

}  // namespace detail

inline SweepSpec parse_sweep_config(std::istream& in) {
  SweepSpec spec;
  std::set<std::string> seen;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    raw = detail::strip(raw);
    if (raw.empty()) continue;

    const auto eq = raw.find('=');
    if (eq == std::string::npos)
      detail::fail_at(line, "expected 'key = value', got '" + raw + "'");
    const std::string key = detail::strip(raw.substr(0, eq));
    const std::string value = detail::strip(raw.substr(eq + 1));
    if (key.empty()) detail::fail_at(line, "empty key");
    if (!seen.insert(key).second)
      detail::fail_at(line, "duplicate key '" + key + "'");
    const auto items = detail::split_list(value);

    if (key == "eta") {
      for (const auto& s : items) {
        const double eta = detail::parse_double(s, line, key);
        if (!(eta >= 0.0 && eta <= std::numbers::pi / 2 + 1e-12))
          detail::fail_at(line, "field 'eta': " + s + " outside [0, pi/2]");
        spec.etas.push_back(eta);
      }
    } else if (key == "N") {
      for (const auto& s : items) {
        const long n = detail::parse_int(s, line, key);
        if (n < 1) detail::fail_at(line, "field 'N': must be >= 1");
        spec.N_values.push_back(static_cast<int>(n));
      }
    } else if (key == "gamma") {
      spec.gammas.clear();
      for (const auto& s : items) {
        const double g = detail::parse_double(s, line, key);
        if (!(g >= 0.0 && g <= 1.0))
          detail::fail_at(line, "field 'gamma': " + s + " outside [0, 1]");
        spec.gammas.push_back(g);
      }
    } else if (key == "direction") {
      for (const auto& s : items)
        spec.directions.push_back(detail::parse_direction(s, line));
    } else if (key == "mode") {
      for (const auto& s : items) spec.modes.push_back(detail::parse_mode(s, line));
    } else if (key == "n_max") {
      if (items.size() != 1) detail::fail_at(line, "field 'n_max': expected one value");
      const long n = detail::parse_int(items[0], line, key);
      if (n < 1) detail::fail_at(line, "field 'n_max': must be >= 1");
      spec.n_max = static_cast<int>(n);
    } else if (key == "seed") {
      if (items.size() != 1) detail::fail_at(line, "field 'seed': expected one value");
      spec.seed = static_cast<std::uint64_t>(detail::parse_int(items[0], line, key));
    } else if (key == "cap") {
      if (items.size() != 1) detail::fail_at(line, "field 'cap': expected one value");
      const long cap = detail::parse_int(items[0], line, key);
      if (cap < 2) detail::fail_at(line, "field 'cap': must be >= 2");
      spec.capacity_cap = static_cast<int>(cap);
    } else {
      detail::fail_at(line, "unknown key '" + key + "'");
    }
  }
  for (const char* required : {"eta", "N", "direction", "mode"})
    if (!seen.count(required))
      throw parse_error(std::string("sweep config: missing required key '") +
                        required + "'");
  return spec;
}

inline SweepSpec parse_sweep_config(const std::string& text) {
  std::istringstream in(text);
  return parse_sweep_config(in);
}

/// Cartesian product of the list-valued fields, sorted into the canonical
/// export order.
inline std::vector<ScenarioConfig> expand(const SweepSpec& spec) {
  std::vector<ScenarioConfig> points;
  for (TaskDirection dir : spec.directions)
    for (RestMode mode : spec.modes)
      for (double eta : spec.etas)
        for (int N : spec.N_values)
          for (double gamma : spec.gammas) {
            ScenarioConfig c;
            c.direction = dir;
            c.mode = mode;
            c.eta = eta;
            c.N = N;
            c.gamma = gamma;
            c.n_max = spec.n_max;
            c.seed = spec.seed;
            c.capacity_cap = spec.capacity_cap;
            points.push_back(c);
          }
  std::sort(points.begin(), points.end(), config_less);
  return points;
}

inline SweepResult run_sweep(const SweepSpec& spec, int workers = 1) {
  return run_points(expand(spec), workers);
}

}  // namespace qhom
