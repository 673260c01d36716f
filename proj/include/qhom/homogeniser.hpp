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

#include <stdexcept>
#include <vector>

#include "qhom/density_matrix.hpp"
#include "qhom/linalg.hpp"
#include "qhom/partial_swap.hpp"
#include "qhom/task.hpp"

namespace qhom {

/// Record of one homogenisation pass: the substrate marginal and its task
/// error after each collision. Index k = 0 is the initial substrate state.
struct CollisionTrace {
  TaskSpec task;
  double eta = 0.0;
  std::vector<DensityMatrix> marginals;  // k = 0..N
  std::vector<double> errors;            // 1 - F(marginal_k, rho_y)

  int collisions() const { return static_cast<int>(errors.size()) - 1; }

  /// Task error after the last collision.
  double final_error() const {
    if (errors.empty())
      throw std::invalid_argument("CollisionTrace: empty trace");
    return errors.back();
  }
};

/// Runs the substrate through one pass of the N-qubit homogenisation
/// machine: builds rho_x (x) rho_y^(x)N, applies the partial swap between
/// the substrate (qubit 0) and rest qubit k for k = 1..N in order, and
/// records the substrate marginal and its error after every collision.
inline CollisionTrace single_pass(const TaskSpec& task, int N,
                                  SwapStrength eta,
                                  int max_qubits = default_qubit_cap) {
  if (N < 1) throw std::invalid_argument("single_pass: N must be >= 1");

  DensityMatrix joint = task.rho_x;
  for (int k = 0; k < N; ++k) joint = tensor(joint, task.rho_y, max_qubits);

  CollisionTrace trace{task, eta.eta, {}, {}};
  trace.marginals.reserve(N + 1);
  trace.errors.reserve(N + 1);
  trace.marginals.push_back(task.rho_x);
  trace.errors.push_back(1.0 - fidelity(task.rho_x, task.rho_y));
  for (int k = 1; k <= N; ++k) {
    joint = apply_partial_swap(joint, 0, k, eta);
    DensityMatrix marginal = partial_trace(joint, {0});
    trace.errors.push_back(1.0 - fidelity(marginal, task.rho_y));
    trace.marginals.push_back(std::move(marginal));
  }
  return trace;
}

/// Independent check for single_pass that never touches a joint state.
/// Each collision partner is fresh and uncorrelated, so the substrate
/// marginal follows the single-qubit map
///
///   rho <- cos^2 rho + sin^2 rho_y + i cos sin (rho_y rho - rho rho_y)
///
/// evaluated entirely in the 2x2 space.
inline CollisionTrace collision_recursion_oracle(const TaskSpec& task, int N,
                                                 SwapStrength eta) {
  if (N < 1)
    throw std::invalid_argument("collision_recursion_oracle: N must be >= 1");
  const double c = std::cos(eta.eta), s = std::sin(eta.eta);
  const double c2 = c * c, s2 = s * s;
  const Complex ics(0.0, c * s);

  const ComplexMatrix& y = task.rho_y.matrix();
  ComplexMatrix rho = task.rho_x.matrix();

  CollisionTrace trace{task, eta.eta, {}, {}};
  trace.marginals.push_back(task.rho_x);
  trace.errors.push_back(1.0 - fidelity(task.rho_x, task.rho_y));
  for (int k = 1; k <= N; ++k) {
    ComplexMatrix next = c2 * rho + s2 * y + ics * (y * rho - rho * y);
    rho = 0.5 * (next + next.adjoint().eval());
    DensityMatrix marginal = DensityMatrix::unchecked(rho);
    trace.errors.push_back(1.0 - fidelity(marginal, task.rho_y));
    trace.marginals.push_back(std::move(marginal));
  }
  return trace;
}

}  // namespace qhom
