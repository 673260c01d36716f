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

#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "qhom/linalg.hpp"
#include "qhom/partial_swap.hpp"
#include "qhom/random_states.hpp"
#include "test_helpers.hpp"

using namespace qhom;
using qhom::test::max_abs_diff;
using Catch::Matchers::WithinAbs;

namespace {

// Reference path: materialize U = cos(eta) I + i sin(eta) S as a dense
// matrix and conjugate. Only used to cross-check the permutation-based
// implementation.
DensityMatrix apply_partial_swap_dense(const DensityMatrix& rho, int a, int b,
                                       double eta) {
  const int n = rho.num_qubits();
  const Eigen::Index dim = rho.dim();
  ComplexMatrix swap = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    swap(detail::swap_bits(i, n - 1 - a, n - 1 - b), i) = 1.0;
  const ComplexMatrix u = std::cos(eta) * ComplexMatrix::Identity(dim, dim) +
                          Complex(0, 1) * std::sin(eta) * swap;
  ComplexMatrix out = u * rho.matrix() * u.adjoint();
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix::unchecked(std::move(out));
}

}  // namespace

TEST_CASE("SwapStrength range") {
  CHECK_NOTHROW(SwapStrength(0.0));
  CHECK_NOTHROW(SwapStrength(std::numbers::pi / 2));
  CHECK_THROWS_AS(SwapStrength(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(SwapStrength(2.0), std::invalid_argument);
}

TEST_CASE("partial swap basics") {
  Rng rng(23);
  const DensityMatrix a = random_density_matrix(rng, 1);
  const DensityMatrix b = random_density_matrix(rng, 1);
  const DensityMatrix joint = tensor(a, b);

  SECTION("eta = 0 is the identity") {
    CHECK(max_abs_diff(apply_partial_swap(joint, 0, 1, SwapStrength(0.0)),
                       joint) < 1e-15);
  }
  SECTION("eta = pi/2 is a full swap") {
    const DensityMatrix swapped =
        apply_partial_swap(joint, 0, 1, SwapStrength(std::numbers::pi / 2));
    CHECK(max_abs_diff(swapped, tensor(b, a)) < 1e-12);
  }
  SECTION("eta = pi/4 on diagonal states averages populations") {
    const DensityMatrix in = tensor(ket0_state(), qubit_diag(0.55));
    const DensityMatrix out =
        apply_partial_swap(in, 0, 1, SwapStrength(std::numbers::pi / 4));
    const DensityMatrix substrate = partial_trace(out, {0});
    CHECK_THAT(substrate.population(0), WithinAbs(0.775, 1e-12));
    CHECK_THAT(substrate.population(1), WithinAbs(0.225, 1e-12));
    // cross-check against the dense-unitary route
    CHECK(max_abs_diff(out, apply_partial_swap_dense(in, 0, 1,
                                                     std::numbers::pi / 4)) <
          1e-14);
  }
  SECTION("rejects a == b and out-of-range qubits") {
    CHECK_THROWS_AS(apply_partial_swap(joint, 1, 1, SwapStrength(0.3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_partial_swap(joint, 0, 2, SwapStrength(0.3)),
                    std::invalid_argument);
  }
}

TEST_CASE("partial swap agrees with the dense unitary on random states") {
  Rng rng(29);
  for (int t = 0; t < 25; ++t) {
    const DensityMatrix rho = random_density_matrix(rng, 3);
    const int a = t % 3;
    const int b = (a + 1 + t % 2) % 3;
    const double eta = 0.05 + 0.3 * (t % 5);
    CHECK(max_abs_diff(apply_partial_swap(rho, a, b, SwapStrength(eta)),
                       apply_partial_swap_dense(rho, a, b, eta)) < 1e-13);
  }
}

TEST_CASE("partial swap preserves purity and state validity") {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_density_matrix(rng, 3);
    const double before = purity(rho);
    const DensityMatrix out =
        apply_partial_swap(rho, 0, 1 + t % 2, SwapStrength(0.05 + 0.07 * t));
    CHECK_THAT(purity(out), WithinAbs(before, 1e-9));
    CHECK_NOTHROW(out.validate());
  }
}
