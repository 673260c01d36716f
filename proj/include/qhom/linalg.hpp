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
#include <cmath>
#include <span>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "qhom/density_matrix.hpp"
#include "qhom/errors.hpp"

namespace qhom {

/// Kronecker product a (x) b. a's qubits occupy the high-order index bits
/// of the result, so tensor(substrate, rest) puts the substrate at qubit 0.
/// Throws capacity_error if the combined register exceeds max_qubits.
inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b,
                            int max_qubits = default_qubit_cap) {
  const int nq = a.num_qubits() + b.num_qubits();
  if (nq > max_qubits) {
    std::ostringstream msg;
    msg << "tensor: " << nq << " qubits exceeds register cap of "
        << max_qubits;
    throw capacity_error(msg.str());
  }
  const Eigen::Index da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
  return DensityMatrix::unchecked(std::move(out));
}

/// Reduced state on the kept qubits (ascending order preserved). The traced
/// qubits are summed out by embedding kept/traced sub-indices back into full
/// register indices with bit arithmetic.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   std::span<const int> keep) {
  const int n = rho.num_qubits();
  if (keep.empty())
    throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.front() < 0 || kept.back() >= n)
    throw std::invalid_argument("partial_trace: qubit index out of range");

  std::vector<int> traced;
  for (int q = 0, k = 0; q < n; ++q) {
    if (k < static_cast<int>(kept.size()) && kept[k] == q)
      ++k;
    else
      traced.push_back(q);
  }
  const int m = static_cast<int>(kept.size());
  const int t = n - m;
  const Eigen::Index dim_out = Eigen::Index{1} << m;
  const Eigen::Index dim_tr = Eigen::Index{1} << t;

  // Bit position of qubit q in a w-qubit register is (w-1-q).
  auto embed = [n](Eigen::Index sub, const std::vector<int>& qubits) {
    Eigen::Index full = 0;
    const int w = static_cast<int>(qubits.size());
    for (int a = 0; a < w; ++a)
      if ((sub >> (w - 1 - a)) & 1) full |= Eigen::Index{1} << (n - 1 - qubits[a]);
    return full;
  };

  std::vector<Eigen::Index> kept_part(dim_out), traced_part(dim_tr);
  for (Eigen::Index i = 0; i < dim_out; ++i) kept_part[i] = embed(i, kept);
  for (Eigen::Index v = 0; v < dim_tr; ++v) traced_part[v] = embed(v, traced);

  ComplexMatrix out = ComplexMatrix::Zero(dim_out, dim_out);
  const ComplexMatrix& in = rho.matrix();
  for (Eigen::Index j = 0; j < dim_out; ++j)
    for (Eigen::Index i = 0; i < dim_out; ++i) {
      Complex acc = 0.0;
      for (Eigen::Index v = 0; v < dim_tr; ++v)
        acc += in(kept_part[i] | traced_part[v], kept_part[j] | traced_part[v]);
      out(i, j) = acc;
    }
  return DensityMatrix::unchecked(std::move(out));
}

inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

struct Eigh {
  Eigen::VectorXd values;   // ascending
  ComplexMatrix vectors;    // columns match values
};

/// Hermitian eigendecomposition. Throws validation_error if the input
/// deviates from Hermiticity beyond tol.
inline Eigh eigh(const ComplexMatrix& m, double tol = validation_tol) {
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    std::ostringstream msg;
    msg << "eigh: input is not Hermitian (max deviation " << dev << ")";
    throw validation_error(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw validation_error("eigh: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline Eigh eigh(const DensityMatrix& rho) { return eigh(rho.matrix()); }

namespace detail {
// Eigenvalues this close to zero (relative to the spectral radius) are
// eigensolver noise on rank-deficient inputs. They must snap to exactly 0:
// the square root would otherwise amplify 1e-16 noise to 1e-8.
inline double zero_snap_cutoff(const Eigen::VectorXd& lambda) {
  const double scale =
      std::max(1.0, lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0);
  return 1e-14 * scale;
}
}  // namespace detail

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to 0 and
/// values slightly above 1 are clamped to 1; anything below -tol is an error.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& m,
                              double tol = validation_tol) {
  Eigh ed = eigh(m, tol);
  Eigen::VectorXd lambda = ed.values;
  const double cutoff = detail::zero_snap_cutoff(lambda);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < -tol) {
      std::ostringstream msg;
      msg << "sqrt_psd: eigenvalue " << lambda[i] << " below -" << tol;
      throw validation_error(msg.str());
    }
    lambda[i] = lambda[i] < cutoff ? 0.0 : std::min(lambda[i], 1.0);
  }
  ComplexMatrix root = ed.vectors *
                       lambda.cwiseSqrt().cast<Complex>().asDiagonal() *
                       ed.vectors.adjoint();
  return 0.5 * (root + root.adjoint().eval());
}

inline ComplexMatrix sqrt_psd(const DensityMatrix& rho) {
  return sqrt_psd(rho.matrix());
}

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2, clamped to [0, 1].
inline double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  const ComplexMatrix ra = sqrt_psd(a);
  ComplexMatrix inner = ra * b.matrix() * ra;
  inner = 0.5 * (inner + inner.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      inner, Eigen::EigenvaluesOnly);
  const double cutoff = detail::zero_snap_cutoff(solver.eigenvalues());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    if (solver.eigenvalues()[i] > cutoff)
      sum += std::sqrt(solver.eigenvalues()[i]);
  return std::clamp(sum * sum, 0.0, 1.0);
}

/// Tr(rho^2). Equals sum of |entries|^2 for Hermitian rho.
inline double purity(const DensityMatrix& rho) {
  return rho.matrix().squaredNorm();
}

}  // namespace qhom
