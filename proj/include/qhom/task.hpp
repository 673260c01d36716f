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
#include <string>
#include <string_view>
#include <utility>

#include "qhom/density_matrix.hpp"

namespace qhom {

/// Which way the state transformation runs: T maps rho_x to rho_y, the
/// transpose swaps the roles.
enum class TaskDirection { T, T_transpose };

inline std::string to_string(TaskDirection d) {
  return d == TaskDirection::T ? "T" : "T_transpose";
}

/// Single-qubit state transformation rho_x -> rho_y.
struct TaskSpec {
  DensityMatrix rho_x = ket0_state();
  DensityMatrix rho_y = ket0_state();
  TaskDirection label = TaskDirection::T;

  static TaskSpec make(DensityMatrix x, DensityMatrix y,
                       TaskDirection label = TaskDirection::T) {
    if (x.num_qubits() != 1 || y.num_qubits() != 1)
      throw std::invalid_argument("TaskSpec: states must be single-qubit");
    x.validate();
    y.validate();
    return TaskSpec{std::move(x), std::move(y), label};
  }
};

/// The reverse task {rho_y -> rho_x}.
inline TaskSpec transpose_of(const TaskSpec& task) {
  return TaskSpec{task.rho_y, task.rho_x,
                  task.label == TaskDirection::T ? TaskDirection::T_transpose
                                                 : TaskDirection::T};
}

/// Quasi-maximally mixed preparation diag((1+gamma)/2, (1-gamma)/2).
/// gamma = 0 is the ideal maximally mixed state.
inline DensityMatrix mixed_preparation(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("mixed_preparation: gamma outside [0, 1]");
  return qubit_diag((1.0 + gamma) / 2.0);
}

/// The pure-to-mixed homogenisation task |0><0| -> diag((1+g)/2, (1-g)/2),
/// or its transpose.
inline TaskSpec homogenisation_task(TaskDirection direction, double gamma) {
  TaskSpec forward =
      TaskSpec::make(ket0_state(), mixed_preparation(gamma), TaskDirection::T);
  return direction == TaskDirection::T ? forward : transpose_of(forward);
}

}  // namespace qhom
