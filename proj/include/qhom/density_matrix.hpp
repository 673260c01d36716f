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

#include <complex>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

#include "qhom/errors.hpp"

namespace qhom {

/// Tolerance for structural validation (Hermiticity, trace, positivity).
inline constexpr double validation_tol = 1e-10;
/// Tolerance for reconstruction-style checks (eigendecomposition, sqrt).
inline constexpr double reconstruction_tol = 1e-9;
/// Default register cap: 2^11 = 2048-dim states, ~64 MB per matrix.
inline constexpr int default_qubit_cap = 11;

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Density operator over a register of qubits. Qubit 0 occupies the
/// highest-order index bit, so basis index i of an n-qubit register has
/// qubit q stored at bit (n-1-q).
///
/// Instances are immutable after construction. `from_matrix` enforces the
/// invariants (Hermitian, unit trace, positive semidefinite, power-of-two
/// dimension); evolution code uses `unchecked` on outputs that preserve
/// them by construction.
class DensityMatrix {
 public:
  /// Validating constructor; throws validation_error on any violated
  /// invariant.
  static DensityMatrix from_matrix(ComplexMatrix m) {
    DensityMatrix rho(std::move(m));
    rho.validate();
    return rho;
  }

  /// Trusted constructor for matrices known to satisfy the invariants.
  static DensityMatrix unchecked(ComplexMatrix m) {
    return DensityMatrix(std::move(m));
  }

  /// The 0-qubit state: the 1x1 matrix [1]. Identity element of `tensor`.
  static DensityMatrix scalar() {
    ComplexMatrix m(1, 1);
    m(0, 0) = 1.0;
    return DensityMatrix(std::move(m));
  }

  /// |index><index| on num_qubits qubits.
  static DensityMatrix basis_state(int num_qubits, Eigen::Index index) {
    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    if (index < 0 || index >= d)
      throw std::invalid_argument("basis_state: index out of range");
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    m(index, index) = 1.0;
    return DensityMatrix(std::move(m));
  }

  /// I / 2^n.
  static DensityMatrix maximally_mixed(int num_qubits) {
    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    ComplexMatrix m = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    return DensityMatrix(std::move(m));
  }

  /// Projector onto the given (not necessarily normalized) amplitude vector.
  static DensityMatrix pure(const Eigen::VectorXcd& amplitudes) {
    const double norm2 = amplitudes.squaredNorm();
    if (norm2 <= 0.0)
      throw std::invalid_argument("pure: zero amplitude vector");
    ComplexMatrix m = (amplitudes * amplitudes.adjoint()) / norm2;
    return from_matrix(std::move(m));
  }

  /// Diagonal state from a population vector (must sum to 1).
  static DensityMatrix diagonal(const Eigen::VectorXd& populations) {
    ComplexMatrix m =
        populations.cast<Complex>().asDiagonal().toDenseMatrix();
    return from_matrix(std::move(m));
  }

  Eigen::Index dim() const { return mat_.rows(); }
  int num_qubits() const { return num_qubits_; }
  const ComplexMatrix& matrix() const { return mat_; }

  Complex operator()(Eigen::Index i, Eigen::Index j) const {
    return mat_(i, j);
  }

  /// Real part of the i-th diagonal entry.
  double population(Eigen::Index i) const { return mat_(i, i).real(); }

  double trace_real() const { return mat_.trace().real(); }

  /// Checks all invariants, throwing validation_error with a description of
  /// the first violation found. The positivity check costs an eigensolve.
  void validate(double tol = validation_tol) const {
    if (mat_.rows() != mat_.cols())
      throw validation_error("density matrix is not square");
    if ((Eigen::Index{1} << num_qubits_) != mat_.rows())
      throw validation_error("density matrix dimension is not a power of 2");
    const double herm_dev =
        (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > tol) {
      std::ostringstream msg;
      msg << "density matrix is not Hermitian (max deviation " << herm_dev
          << ")";
      throw validation_error(msg.str());
    }
    const Complex tr = mat_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
      std::ostringstream msg;
      msg << "density matrix trace is " << tr << ", expected 1";
      throw validation_error(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        mat_, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol) {
      std::ostringstream msg;
      msg << "density matrix has negative eigenvalue " << min_eig;
      throw validation_error(msg.str());
    }
  }

  bool is_valid(double tol = validation_tol) const {
    try {
      validate(tol);
      return true;
    } catch (const validation_error&) {
      return false;
    }
  }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    num_qubits_ = 0;
    while ((Eigen::Index{1} << num_qubits_) < mat_.rows()) ++num_qubits_;
  }

  ComplexMatrix mat_;
  int num_qubits_ = 0;
};

/// Single-qubit diagonal state diag(p0, 1-p0).
inline DensityMatrix qubit_diag(double p0) {
  Eigen::VectorXd p(2);
  p << p0, 1.0 - p0;
  return DensityMatrix::diagonal(p);
}

/// |0><0|.
inline DensityMatrix ket0_state() { return DensityMatrix::basis_state(1, 0); }

}  // namespace qhom
