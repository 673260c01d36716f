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

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qhom/export_format.hpp"
#include "qhom/scenarios.hpp"

namespace qhom {

enum class ExportFormat { csv, json };

inline ExportFormat parse_export_format(std::string_view s) {
  if (s == "csv") return ExportFormat::csv;
  if (s == "json") return ExportFormat::json;
  throw parse_error("unknown export format '" + std::string(s) +
                    "' (expected csv or json)");
}

namespace detail {

struct CappedDelta {
  double value;
  bool overflow;
};

inline CappedDelta cap_delta(double delta) {
  if (!(delta <= delta_overflow_cap))  // catches +inf and NaN as overflow
    return {delta_overflow_cap, true};
  return {delta, false};
}

}  // namespace detail

/// Usage-series CSV. Columns: scenario_id, direction, mode, eta, N, gamma,
/// n, epsilon, steadiness, delta, overflow_flag.
inline void write_series_csv(const SweepResult& result, std::ostream& out) {
  out << "scenario_id,direction,mode,eta,N,gamma,n,epsilon,steadiness,delta,"
         "overflow_flag\n";
  for (const SeriesRecord& record : result.series) {
    const ScenarioConfig& c = record.config;
    const std::string prefix = scenario_id(c) + "," + to_string(c.direction) +
                               "," + to_string(c.mode) + "," +
                               format_number(c.eta) + "," +
                               std::to_string(c.N) + "," +
                               format_number(c.gamma) + ",";
    for (const UsageRecord& u : record.series.records) {
      const auto [delta, overflow] = detail::cap_delta(u.delta);
      out << prefix << u.n << "," << format_number(u.epsilon) << ","
          << format_number(u.steadiness) << "," << format_number(delta) << ","
          << (overflow ? "true" : "false") << "\n";
    }
  }
}

/// Collision-trace CSV (figure3-style runs). Columns: scenario_id,
/// direction, eta, N, gamma, k, rho00, rho11, epsilon.
inline void write_trace_csv(const SweepResult& result, std::ostream& out) {
  out << "scenario_id,direction,eta,N,gamma,k,rho00,rho11,epsilon\n";
  for (const TraceRecord& record : result.traces) {
    const ScenarioConfig& c = record.config;
    const std::string prefix = scenario_id(c) + "," + to_string(c.direction) +
                               "," + format_number(c.eta) + "," +
                               std::to_string(c.N) + "," +
                               format_number(c.gamma) + ",";
    const CollisionTrace& trace = record.trace;
    for (std::size_t k = 0; k < trace.errors.size(); ++k) {
      out << prefix << k << "," << format_number(trace.marginals[k].population(0))
          << "," << format_number(trace.marginals[k].population(1)) << ","
          << format_number(trace.errors[k]) << "\n";
    }
  }
}

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace detail

/// JSON mirror of the CSV schemas, plus a top-level metadata object.
inline void write_json(const SweepResult& result, std::ostream& out) {
  out << "{\n  \"metadata\": {\n"
      << "    \"tool_version\": \"" << detail::json_escape(result.metadata.tool_version)
      << "\",\n    \"timestamp_utc\": \""
      << detail::json_escape(result.metadata.timestamp_utc) << "\",\n"
      << "    \"wall_seconds\": " << format_number(result.metadata.wall_seconds)
      << "\n  },\n";

  out << "  \"series_records\": [";
  bool first = true;
  for (const SeriesRecord& record : result.series) {
    const ScenarioConfig& c = record.config;
    for (const UsageRecord& u : record.series.records) {
      const auto [delta, overflow] = detail::cap_delta(u.delta);
      out << (first ? "\n" : ",\n") << "    {\"scenario_id\": \""
          << scenario_id(c) << "\", \"direction\": \"" << to_string(c.direction)
          << "\", \"mode\": \"" << to_string(c.mode) << "\", \"eta\": "
          << format_number(c.eta) << ", \"N\": " << c.N << ", \"gamma\": "
          << format_number(c.gamma) << ", \"n\": " << u.n << ", \"epsilon\": "
          << format_number(u.epsilon) << ", \"steadiness\": "
          << format_number(u.steadiness) << ", \"delta\": "
          << format_number(delta) << ", \"overflow_flag\": "
          << (overflow ? "true" : "false") << "}";
      first = false;
    }
  }
  out << (first ? "" : "\n  ") << "],\n";

  out << "  \"trace_records\": [";
  first = true;
  for (const TraceRecord& record : result.traces) {
    const ScenarioConfig& c = record.config;
    const CollisionTrace& trace = record.trace;
    for (std::size_t k = 0; k < trace.errors.size(); ++k) {
      out << (first ? "\n" : ",\n") << "    {\"scenario_id\": \""
          << scenario_id(c) << "\", \"direction\": \"" << to_string(c.direction)
          << "\", \"eta\": " << format_number(c.eta) << ", \"N\": " << c.N
          << ", \"gamma\": " << format_number(c.gamma) << ", \"k\": " << k
          << ", \"rho00\": " << format_number(trace.marginals[k].population(0))
          << ", \"rho11\": " << format_number(trace.marginals[k].population(1))
          << ", \"epsilon\": " << format_number(trace.errors[k]) << "}";
      first = false;
    }
  }
  out << (first ? "" : "\n  ") << "]\n}\n";
}

inline std::string series_csv_string(const SweepResult& result) {
  std::ostringstream out;
  write_series_csv(result, out);
  return out.str();
}

inline std::string trace_csv_string(const SweepResult& result) {
  std::ostringstream out;
  write_trace_csv(result, out);
  return out.str();
}

/// Writes result files under dir, named after `stem`. CSV results with both
/// series and traces land in "<stem>.csv" and "<stem>_trace.csv"; a result
/// holding only one kind uses "<stem>.csv" alone. JSON always produces one
/// "<stem>.json". Returns the written paths.
inline std::vector<std::filesystem::path> export_result(
    const SweepResult& result, const std::filesystem::path& dir,
    ExportFormat format, std::string_view stem) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw io_error("cannot create output directory " + dir.string() + ": " +
                   ec.message());

  auto open = [](const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    return out;
  };

  std::vector<std::filesystem::path> written;
  if (format == ExportFormat::json) {
    const auto path = dir / (std::string(stem) + ".json");
    auto out = open(path);
    write_json(result, out);
    if (!out) throw io_error("failed while writing " + path.string());
    written.push_back(path);
    return written;
  }

  if (!result.series.empty() || result.traces.empty()) {
    const auto path = dir / (std::string(stem) + ".csv");
    auto out = open(path);
    write_series_csv(result, out);
    if (!out) throw io_error("failed while writing " + path.string());
    written.push_back(path);
  }
  if (!result.traces.empty()) {
    const auto path = result.series.empty()
                          ? dir / (std::string(stem) + ".csv")
                          : dir / (std::string(stem) + "_trace.csv");
    auto out = open(path);
    write_trace_csv(result, out);
    if (!out) throw io_error("failed while writing " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace qhom
