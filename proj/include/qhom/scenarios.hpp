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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "qhom/export_format.hpp"
#include "qhom/machine.hpp"
#include "qhom/task.hpp"
#include "qhom/version.hpp"

namespace qhom {

/// One point of parameter space: everything needed to run a deterioration
/// series (or a single collision pass, for trace presets).
struct ScenarioConfig {
  TaskDirection direction = TaskDirection::T;
  RestMode mode = RestMode::entangled;
  double eta = 0.12;
  int N = 3;
  double gamma = 0.0;
  int n_max = 50;
  std::uint64_t seed = 0;
  int capacity_cap = default_qubit_cap;
};

inline std::string scenario_id(const ScenarioConfig& c) {
  return to_string(c.direction) + "_" + to_string(c.mode) + "_eta" +
         format_number(c.eta) + "_N" + std::to_string(c.N) + "_gamma" +
         format_number(c.gamma);
}

/// Ordering used for all exported output: lexicographic in
/// (direction, mode, eta, N, gamma).
inline bool config_less(const ScenarioConfig& a, const ScenarioConfig& b) {
  return std::tuple(a.direction, a.mode, a.eta, a.N, a.gamma) <
         std::tuple(b.direction, b.mode, b.eta, b.N, b.gamma);
}

struct RunMetadata {
  std::string tool_version{version};
  std::string timestamp_utc;
  double wall_seconds = 0.0;
};

inline std::string utc_timestamp_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct SeriesRecord {
  ScenarioConfig config;
  UsageSeries series;
};

struct TraceRecord {
  ScenarioConfig config;
  CollisionTrace trace;
};

/// A completed batch of scenario points. Figure presets fill either the
/// series list (deterioration sweeps) or the trace list (collision passes).
struct SweepResult {
  RunMetadata metadata;
  std::vector<SeriesRecord> series;
  std::vector<TraceRecord> traces;

  bool empty() const { return series.empty() && traces.empty(); }
};

inline UsageSeries run_point(const ScenarioConfig& c) {
  const TaskSpec task = homogenisation_task(c.direction, c.gamma);
  return deterioration_series(task, c.N, SwapStrength(c.eta), c.n_max, c.mode,
                              c.capacity_cap);
}

/// Runs every config point, spreading the points over `workers` threads.
/// Results land at their config's index, so output order never depends on
/// scheduling. Exceptions from workers are rethrown on the caller thread.
inline SweepResult run_points(std::vector<ScenarioConfig> configs,
                              int workers = 1) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult result;
  result.metadata.timestamp_utc = utc_timestamp_now();
  result.series.resize(configs.size());

  workers = std::max(1, std::min<int>(workers, static_cast<int>(configs.size())));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size() || failed.load()) return;
      try {
        result.series[i] = SeriesRecord{configs[i], run_point(configs[i])};
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  result.metadata.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

/// Both collision passes behind the bar plots: pure-to-mixed and its
/// transpose at eta = pi/4, N = 3. gamma defaults to the measured 0.55/0.45
/// preparation.
inline SweepResult run_figure3(double gamma = 0.1) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult result;
  result.metadata.timestamp_utc = utc_timestamp_now();

  const double eta = std::numbers::pi / 4;
  for (TaskDirection dir : {TaskDirection::T, TaskDirection::T_transpose}) {
    ScenarioConfig config;
    config.direction = dir;
    config.mode = RestMode::entangled;  // single pass; mode is irrelevant
    config.eta = eta;
    config.N = 3;
    config.gamma = gamma;
    config.n_max = 1;
    const TaskSpec task = homogenisation_task(dir, gamma);
    result.traces.push_back(
        {config, single_pass(task, config.N, SwapStrength(eta))});
  }
  result.metadata.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

inline std::vector<int> default_figure4_N_list() {
  return {2, 3, 4, 5, 6, 7, 8};
}

inline std::vector<ScenarioConfig> figure4_grid(
    const std::vector<double>& etas, const std::vector<int>& N_list,
    int n_max, double gamma = 0.0, int capacity_cap = default_qubit_cap) {
  std::vector<ScenarioConfig> grid;
  for (TaskDirection dir : {TaskDirection::T, TaskDirection::T_transpose})
    for (RestMode mode : {RestMode::entangled, RestMode::separable,
                          RestMode::analytic_approx})
      for (double eta : etas)
        for (int N : N_list) {
          ScenarioConfig c;
          c.direction = dir;
          c.mode = mode;
          c.eta = eta;
          c.N = N;
          c.gamma = gamma;
          c.n_max = n_max;
          c.capacity_cap = capacity_cap;
          grid.push_back(c);
        }
  std::sort(grid.begin(), grid.end(), config_less);
  return grid;
}

/// Deterioration series for every (eta, N, direction, theory mode)
/// combination, with the ideal gamma = 0 task.
inline SweepResult run_figure4(const std::vector<double>& etas = {0.3, 0.12},
                               const std::vector<int>& N_list =
                                   default_figure4_N_list(),
                               int n_max = 50, int workers = 1,
                               int capacity_cap = default_qubit_cap) {
  return run_points(figure4_grid(etas, N_list, n_max, 0.0, capacity_cap),
                    workers);
}

}  // namespace qhom
