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

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "channelforge/matrix.hpp"

namespace channelforge {

// Representations of a linear map on n x n matrices. All of them share the
// row-major vec convention of linalg.hpp. With that convention |D>> lives in
// (output (x) input), so trace preservation is a partial trace over the FIRST
// Choi factor and unitality a partial trace over the SECOND.

/// Superoperator acting on |rho>>: |rho'>> = A |rho>>.
class SuperopA {
 public:
  explicit SuperopA(ComplexMatrix matrix);
  std::size_t n() const noexcept { return n_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  std::size_t n_;
  ComplexMatrix matrix_;
};

/// Dynamical (Choi) matrix, the reshuffled superoperator.
class ChoiB {
 public:
  explicit ChoiB(ComplexMatrix matrix);
  std::size_t n() const noexcept { return n_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  std::size_t n_;
  ComplexMatrix matrix_;
};

/// Operator-sum form rho -> sum_a D_a rho D_a^dagger.
class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> operators);
  std::size_t n() const noexcept { return n_; }
  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  std::size_t size() const noexcept { return operators_.size(); }

 private:
  std::size_t n_;
  std::vector<ComplexMatrix> operators_;
};

/// Operator sum-difference form: sum D rho D^dagger - sum F rho F^dagger.
/// Either part may be empty, not both.
class OSD {
 public:
  OSD(std::size_t n, std::vector<ComplexMatrix> positive_part,
      std::vector<ComplexMatrix> negative_part);
  std::size_t n() const noexcept { return n_; }
  const std::vector<ComplexMatrix>& positive_part() const noexcept { return positive_; }
  const std::vector<ComplexMatrix>& negative_part() const noexcept { return negative_; }

 private:
  std::size_t n_;
  std::vector<ComplexMatrix> positive_;
  std::vector<ComplexMatrix> negative_;
};

/// n^2 operators orthonormal under tr(A_j^dagger A_k).
class OperatorBasis {
 public:
  /// Throws BasisError unless the elements are n^2 orthonormal n x n matrices.
  explicit OperatorBasis(std::vector<ComplexMatrix> elements, std::string name = "custom",
                         double tol = 1e-10);

  /// Matrix units E_ij in row-major order (E_00, E_01, ...).
  static OperatorBasis standard(std::size_t n);
  /// {1, sigma_1, sigma_2, sigma_3} / sqrt(2).
  static OperatorBasis pauli();

  std::size_t n() const noexcept { return n_; }
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t n_;
  std::vector<ComplexMatrix> elements_;
  std::string name_;
};

/// Process matrix: E(rho) = sum_ij chi_ij A_i rho A_j^dagger.
class ChiMatrix {
 public:
  ChiMatrix(OperatorBasis basis, ComplexMatrix matrix);
  std::size_t n() const noexcept { return basis_.n(); }
  const OperatorBasis& basis() const noexcept { return basis_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  OperatorBasis basis_;
  ComplexMatrix matrix_;
};

/// System-environment unitary on (system (x) environment); the environment
/// starts in basis state env_state_index.
class StinespringModel {
 public:
  StinespringModel(std::size_t n, std::size_t env_dim, ComplexMatrix unitary,
                   std::size_t env_state_index = 0, double unitarity_tol = 1e-9);
  std::size_t n() const noexcept { return n_; }
  std::size_t env_dim() const noexcept { return env_dim_; }
  const ComplexMatrix& unitary() const noexcept { return unitary_; }
  std::size_t env_state_index() const noexcept { return env_state_index_; }

 private:
  std::size_t n_;
  std::size_t env_dim_;
  ComplexMatrix unitary_;
  std::size_t env_state_index_;
};

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

/// Qubit map in Bloch coordinates: a -> T a + t (trace preserving by construction).
struct AffineQubit {
  Mat3 T{};
  Vec3 t{};
  friend bool operator==(const AffineQubit&, const AffineQubit&) = default;
};

using Channel = std::variant<SuperopA, ChoiB, KrausSet, ChiMatrix, OSD, StinespringModel,
                             AffineQubit>;

/// System dimension of any representation (2 for AffineQubit).
std::size_t dimension(const Channel& ch);
/// Serialization tag: kraus, choi, superop, chi, stinespring, osd, affine-qubit.
std::string kind_name(const Channel& ch);

}  // namespace channelforge
