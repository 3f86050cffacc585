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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace channelforge {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Carries states, operators and
/// superoperators alike; column vectors are n x 1 matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  /// Nested row literal, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix column(std::vector<cplx> entries);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_ && rows_ > 0; }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<cplx> entries() noexcept { return entries_; }
  std::span<const cplx> entries() const noexcept { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx factor);

  /// Exact entrywise equality (shapes included).
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix m, cplx factor);
ComplexMatrix operator*(cplx factor, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

ComplexMatrix matmul(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix add(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix scale(const ComplexMatrix& m, cplx factor);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);

cplx trace(const ComplexMatrix& m);
/// A^dagger B summed entrywise: the Hilbert-Schmidt inner product tr(A^dagger B).
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest entry modulus.
double max_abs(const ComplexMatrix& m);
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |m - m^dagger| over entries.
double hermiticity_deviation(const ComplexMatrix& m);
/// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

/// |v><w| for column vectors v, w.
ComplexMatrix outer(const ComplexMatrix& v, const ComplexMatrix& w);

/// Pauli matrices and the 2x2 identity.
ComplexMatrix pauli(int which);

}  // namespace channelforge
