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

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qhom/density_matrix.hpp"
#include "qhom/homogeniser.hpp"
#include "qhom/linalg.hpp"
#include "qhom/partial_swap.hpp"
#include "qhom/task.hpp"

namespace qhom {

/// How the rest state is carried between usages:
///   entangled            keep the exact post-usage joint rest state
///   separable            replace it by the product of its single-qubit
///                        marginals
///   diagonal_correlated  keep the exact joint diagonal, zero all coherences
///                        (the strongest state preparable by classical
///                        correlation replay in the computational basis)
///   analytic_approx      no state evolution; steadiness modeled in closed
///                        form as S_n = S_1^n
enum class RestMode { entangled, separable, diagonal_correlated, analytic_approx };

inline std::string to_string(RestMode m) {
  switch (m) {
    case RestMode::entangled: return "entangled";
    case RestMode::separable: return "separable";
    case RestMode::diagonal_correlated: return "diagonal_correlated";
    case RestMode::analytic_approx: return "analytic_approx";
  }
  return "?";
}

/// The rest R: N machine qubits, their current joint state, and the pristine
/// reference state steadiness is measured against.
struct MachineState {
  int N = 0;
  DensityMatrix rest = DensityMatrix::scalar();
  DensityMatrix rest_initial = DensityMatrix::scalar();
  RestMode mode = RestMode::entangled;
  int usages = 0;
};

/// Prepares the machine for the task: N rest qubits each in rho_y.
inline MachineState make_machine(const TaskSpec& task, int N, RestMode mode,
                                 int max_qubits = default_qubit_cap) {
  if (N < 1) throw std::invalid_argument("make_machine: N must be >= 1");
  // The machine must leave room for one substrate qubit per usage.
  if (N + 1 > max_qubits) {
    std::ostringstream msg;
    msg << "make_machine: N=" << N << " needs " << N + 1
        << " joint qubits, cap is " << max_qubits;
    throw capacity_error(msg.str());
  }
  DensityMatrix rest = task.rho_y;
  for (int k = 1; k < N; ++k) rest = tensor(rest, task.rho_y, max_qubits);
  return MachineState{N, rest, rest, mode, 0};
}

namespace detail {

inline DensityMatrix product_of_marginals(const DensityMatrix& rest,
                                          int max_qubits) {
  DensityMatrix prod = partial_trace(rest, {0});
  for (int q = 1; q < rest.num_qubits(); ++q)
    prod = tensor(prod, partial_trace(rest, {q}), max_qubits);
  // Tensoring N marginals raises any trace drift to the N-th power, which
  // compounds exponentially over usages; renormalize to keep it bounded.
  ComplexMatrix normalized = prod.matrix() / prod.trace_real();
  return DensityMatrix::unchecked(std::move(normalized));
}

inline DensityMatrix dephase_computational(const DensityMatrix& rest) {
  Eigen::VectorXd pops = rest.matrix().diagonal().real();
  const double tr = pops.sum();
  if (tr > 0.0) pops /= tr;  // trace already 1 by construction
  ComplexMatrix out = pops.cast<Complex>().asDiagonal().toDenseMatrix();
  return DensityMatrix::unchecked(std::move(out));
}

}  // namespace detail

struct UsageResult {
  MachineState machine;           // carries the mode-post-processed rest
  DensityMatrix substrate_out;
  DensityMatrix rest_raw;         // exact pass output, before post-processing
};

/// One usage of the machine: a fresh substrate in rho_x is tensored onto the
/// rest, collided with rest qubits 1..N in order, and traced out. The rest
/// state is then post-processed according to the machine's mode.
inline UsageResult use_machine(const MachineState& m, const TaskSpec& task,
                               SwapStrength eta,
                               int max_qubits = default_qubit_cap) {
  if (m.mode == RestMode::analytic_approx)
    throw unsupported_mode_error(
        "use_machine: analytic_approx has no state evolution; use "
        "deterioration_series");

  DensityMatrix joint = tensor(task.rho_x, m.rest, max_qubits);
  for (int k = 1; k <= m.N; ++k) joint = apply_partial_swap(joint, 0, k, eta);

  DensityMatrix substrate_out = partial_trace(joint, {0});
  std::vector<int> rest_qubits(m.N);
  std::iota(rest_qubits.begin(), rest_qubits.end(), 1);
  DensityMatrix rest_raw = partial_trace(joint, rest_qubits);

  DensityMatrix rest = rest_raw;
  switch (m.mode) {
    case RestMode::separable:
      rest = detail::product_of_marginals(rest_raw, max_qubits);
      break;
    case RestMode::diagonal_correlated:
      rest = detail::dephase_computational(rest_raw);
      break;
    default:
      break;
  }
  return UsageResult{
      MachineState{m.N, std::move(rest), m.rest_initial, m.mode,
                   m.usages + 1},
      std::move(substrate_out), std::move(rest_raw)};
}

/// Fidelity between the pristine rest preparation and the current rest
/// state. 1 before any usage.
inline double steadiness(const MachineState& m) {
  if (m.usages == 0) return 1.0;
  return fidelity(m.rest_initial, m.rest);
}

/// delta = epsilon / S_n. A fully deteriorated machine (S_n = 0) reports
/// +infinity rather than an error.
inline double relative_deterioration(double epsilon, double steadiness_n) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("relative_deterioration: epsilon outside [0, 1]");
  if (!(steadiness_n >= 0.0 && steadiness_n <= 1.0))
    throw std::invalid_argument(
        "relative_deterioration: steadiness outside [0, 1]");
  if (steadiness_n == 0.0) return std::numeric_limits<double>::infinity();
  return epsilon / steadiness_n;
}

/// Which error enters delta = eps / S_n:
///   fixed_budget  the machine's single-use error from the pristine rest
///                 state, held constant across usages (default)
///   per_usage     the error actually observed at usage n
enum class DeltaEpsilonPolicy { fixed_budget, per_usage };

struct UsageRecord {
  int n = 0;
  double epsilon = 0.0;     // substrate error observed at usage n
  double steadiness = 1.0;  // S_n
  double delta = 0.0;       // relative deterioration
};

struct UsageSeries {
  double epsilon_budget = 0.0;  // single-use error from the pristine rest
  std::vector<UsageRecord> records;
};

/// Runs n_max usages and records (epsilon_n, S_n, delta_n) per usage.
/// S_n is measured on the exact output of the n-th pass; the separable and
/// diagonal_correlated approximations only shape the state carried into the
/// next usage, so all modes coincide at n = 1. analytic_approx takes S_1
/// from one exact usage and extrapolates S_n = S_1^n without evolving any
/// state.
inline UsageSeries deterioration_series(
    const TaskSpec& task, int N, SwapStrength eta, int n_max, RestMode mode,
    int max_qubits = default_qubit_cap,
    DeltaEpsilonPolicy policy = DeltaEpsilonPolicy::fixed_budget) {
  if (n_max < 1)
    throw std::invalid_argument("deterioration_series: n_max must be >= 1");

  UsageSeries series;
  series.epsilon_budget = single_pass(task, N, eta, max_qubits).final_error();
  series.records.reserve(n_max);

  if (mode == RestMode::analytic_approx) {
    MachineState exact = make_machine(task, N, RestMode::entangled, max_qubits);
    const double s1 = steadiness(use_machine(exact, task, eta, max_qubits).machine);
    for (int n = 1; n <= n_max; ++n) {
      const double sn = std::pow(s1, n);
      series.records.push_back(
          {n, series.epsilon_budget, sn,
           relative_deterioration(series.epsilon_budget, sn)});
    }
    return series;
  }

  MachineState machine = make_machine(task, N, mode, max_qubits);
  for (int n = 1; n <= n_max; ++n) {
    UsageResult result = use_machine(machine, task, eta, max_qubits);
    const double sn = fidelity(machine.rest_initial, result.rest_raw);
    machine = std::move(result.machine);
    const double eps_n = 1.0 - fidelity(result.substrate_out, task.rho_y);
    const double eps_for_delta = policy == DeltaEpsilonPolicy::fixed_budget
                                     ? series.epsilon_budget
                                     : eps_n;
    series.records.push_back(
        {n, eps_n, sn, relative_deterioration(eps_for_delta, sn)});
  }
  return series;
}

/// Whether this rest state performs the task to accuracy epsilon in one
/// pass: F(substrate_out, rho_y) >= 1 - epsilon.
inline bool v_epsilon_membership(const TaskSpec& task,
                                 const DensityMatrix& rest, SwapStrength eta,
                                 double epsilon,
                                 int max_qubits = default_qubit_cap) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("v_epsilon_membership: epsilon outside (0, 1)");
  DensityMatrix joint = tensor(task.rho_x, rest, max_qubits);
  for (int k = 1; k <= rest.num_qubits(); ++k)
    joint = apply_partial_swap(joint, 0, k, eta);
  const DensityMatrix out = partial_trace(joint, {0});
  return fidelity(out, task.rho_y) >= 1.0 - epsilon;
}

}  // namespace qhom
