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
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qhom/density_matrix.hpp"

namespace qhom {

/// Interaction strength of the partial swap: 0 is the identity, pi/2 a full
/// SWAP.
struct SwapStrength {
  explicit SwapStrength(double eta_value) : eta(eta_value) {
    if (!(eta >= 0.0 && eta <= std::numbers::pi / 2 + 1e-12))
      throw std::invalid_argument("SwapStrength: eta outside [0, pi/2]");
  }
  double eta;
};

namespace detail {
/// Basis index i with the bits of qubits a and b exchanged.
inline Eigen::Index swap_bits(Eigen::Index i, int pos_a, int pos_b) {
  const Eigen::Index ba = (i >> pos_a) & 1;
  const Eigen::Index bb = (i >> pos_b) & 1;
  if (ba == bb) return i;
  return i ^ ((Eigen::Index{1} << pos_a) | (Eigen::Index{1} << pos_b));
}
}  // namespace detail

/// Conjugates rho by the partial swap U = cos(eta) I + i sin(eta) S_ab,
/// where S_ab exchanges qubits a and b. Works entirely through index-bit
/// permutations of rows/columns:
///
///   U rho U^+ = cos^2 rho + sin^2 S rho S + i cos sin (S rho - rho S)
///
/// which is O(dim^2); the full dim x dim unitary is never materialized.
inline DensityMatrix apply_partial_swap(const DensityMatrix& rho, int a,
                                        int b, SwapStrength strength) {
  const int n = rho.num_qubits();
  if (a == b)
    throw std::invalid_argument("apply_partial_swap: qubits must differ");
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("apply_partial_swap: qubit out of range");

  const double c = std::cos(strength.eta);
  const double s = std::sin(strength.eta);
  const double c2 = c * c, s2 = s * s;
  const Complex ics(0.0, c * s);
  const int pos_a = n - 1 - a, pos_b = n - 1 - b;
  const Eigen::Index dim = rho.dim();

  std::vector<Eigen::Index> sigma(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    sigma[i] = detail::swap_bits(i, pos_a, pos_b);

  const ComplexMatrix& in = rho.matrix();
  ComplexMatrix out(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Eigen::Index sj = sigma[j];
    for (Eigen::Index i = 0; i < dim; ++i) {
      const Eigen::Index si = sigma[i];
      out(i, j) = c2 * in(i, j) + s2 * in(si, sj) +
                  ics * (in(si, j) - in(i, sj));
    }
  }
  // Hermiticity repair: symmetrize after every evolution step.
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix::unchecked(std::move(out));
}

}  // namespace qhom
