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

#include <random>

#include "qhom/density_matrix.hpp"
#include "qhom/task.hpp"

namespace qhom {

using Rng = std::mt19937_64;

inline Eigen::VectorXcd random_unit_vector(Rng& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    v[i] = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

/// Full-rank random state: G G^+ normalized, G complex Gaussian (Ginibre).
inline DensityMatrix random_density_matrix(Rng& rng, int num_qubits = 1) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Eigen::Index d = Eigen::Index{1} << num_qubits;
  ComplexMatrix g(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i)
      g(i, j) = Complex(gauss(rng), gauss(rng));
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint().eval());
  return DensityMatrix::unchecked(std::move(m));
}

inline DensityMatrix random_pure_state(Rng& rng, int num_qubits = 1) {
  return DensityMatrix::pure(random_unit_vector(rng, Eigen::Index{1} << num_qubits));
}

inline DensityMatrix random_diagonal_state(Rng& rng, int num_qubits = 1) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const Eigen::Index d = Eigen::Index{1} << num_qubits;
  Eigen::VectorXd p(d);
  double total = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) total += p[i] = uniform(rng) + 1e-6;
  return DensityMatrix::diagonal(p / total);
}

/// Random task with distinct endpoint states.
inline TaskSpec random_task(Rng& rng, bool diagonal_only) {
  if (diagonal_only)
    return TaskSpec::make(random_diagonal_state(rng), random_diagonal_state(rng));
  return TaskSpec::make(random_density_matrix(rng), random_density_matrix(rng));
}

}  // namespace qhom
