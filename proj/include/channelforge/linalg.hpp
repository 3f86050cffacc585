// Copyright 2026 The ChannelForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "channelforge/matrix.hpp"

namespace channelforge {

inline constexpr double kDefaultHermiticityTol = 1e-9;

/// Kronecker product; block (i, j) of the result is x(i, j) * y.
ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

/// Row-by-row vectorization |Z>>: entry (i, j) lands at flat index i * cols + j.
///
/// Every superoperator identity in the library follows from this single
/// convention, notably (X (x) Y)|Z>> = |X Z Y^T>> and, for a Kraus operator D,
/// |D>> living in (output (x) input).
ComplexMatrix vec(const ComplexMatrix& z);

/// Inverse of vec for an n^2 x 1 column.
ComplexMatrix mat(const ComplexMatrix& v, std::size_t n);

/// Index reshuffle between the superoperator (A) and dynamical (B) forms:
/// B[(i', i), (j', j)] = A[(i', j'), (i, j)]. Involutive.
ComplexMatrix reshuffle(const ComplexMatrix& a, std::size_t n);

enum class Factor { first, second };

/// Partial trace of an operator on (dim_first (x) dim_second), removing `which`.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first,
                            std::size_t dim_second, Factor which);

/// max |U^dagger U - 1| entry.
double unitarity_deviation(const ComplexMatrix& u);

struct EigDecomposition {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
  double residual = 0.0;            // max_k |H v_k - lambda_k v_k|

  ComplexMatrix eigenvector(std::size_t k) const;
};

struct JacobiOptions {
  double hermiticity_tol = kDefaultHermiticityTol;
  double off_diagonal_threshold = 1e-14;  // relative to the Frobenius norm
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Throws NotHermitianError when max |h - h^dagger| exceeds the tolerance; the
/// Hermitian part is diagonalized otherwise. Eigenvalues come out descending,
/// each eigenvector's first non-negligible component is made real positive so
/// that repeated runs produce identical output.
EigDecomposition hermitian_eig(const ComplexMatrix& h, const JacobiOptions& options = {});
EigDecomposition hermitian_eig(const ComplexMatrix& h, double hermiticity_tol);

/// Orthonormal basis of the complement of the column span of `isometry`
/// (whose columns must be orthonormal), as an N x (N - k) matrix.
/// Gram-Schmidt over the canonical basis vectors; at each step the candidate
/// with the largest residual wins, ties going to the lowest index.
ComplexMatrix orthonormal_complement(const ComplexMatrix& isometry);

}  // namespace channelforge
