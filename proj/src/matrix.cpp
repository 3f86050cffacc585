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

#include "channelforge/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "channelforge/errors.hpp"

namespace channelforge {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionError("entry count " + std::to_string(entries_.size()) +
                         " does not match " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::column(std::vector<cplx> entries) {
  const std::size_t n = entries.size();
  return ComplexMatrix(n, 1, std::move(entries));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx factor) {
  for (auto& e : entries_) e *= factor;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix m, cplx factor) { return m *= factor; }
ComplexMatrix operator*(cplx factor, ComplexMatrix m) { return m *= factor; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionError("matmul: inner dimensions " + std::to_string(lhs.cols()) + " and " +
                         std::to_string(rhs.rows()) + " differ");
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cplx a = lhs(i, k);
      if (a == cplx{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix matmul(const ComplexMatrix& lhs, const ComplexMatrix& rhs) { return lhs * rhs; }
ComplexMatrix add(const ComplexMatrix& lhs, const ComplexMatrix& rhs) { return lhs + rhs; }
ComplexMatrix scale(const ComplexMatrix& m, cplx factor) { return m * factor; }

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (auto& e : out.entries()) e = std::conj(e);
  return out;
}

cplx trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("trace of a non-square matrix");
  cplx t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hs_inner");
  cplx s{};
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) s += std::conj(ea[k]) * eb[k];
  return s;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& e : m.entries()) s += std::norm(e);
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double s = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) s += std::norm(ea[k] - eb[k]);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) {
  double best = 0.0;
  for (const auto& e : m.entries()) best = std::max(best, std::abs(e));
  return best;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_difference");
  double best = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) best = std::max(best, std::abs(ea[k] - eb[k]));
  return best;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("Hermiticity of a non-square matrix");
  double best = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
  return best;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("Hermitian part of a non-square matrix");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

bool all_finite(const ComplexMatrix& m) {
  return std::all_of(m.entries().begin(), m.entries().end(), [](const cplx& e) {
    return std::isfinite(e.real()) && std::isfinite(e.imag());
  });
}

ComplexMatrix outer(const ComplexMatrix& v, const ComplexMatrix& w) {
  if (v.cols() != 1 || w.cols() != 1) throw DimensionError("outer: arguments must be columns");
  ComplexMatrix out(v.rows(), w.rows());
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < w.rows(); ++j) out(i, j) = v(i, 0) * std::conj(w(j, 0));
  return out;
}

ComplexMatrix pauli(int which) {
  using namespace std::complex_literals;
  switch (which) {
    case 0:
      return {{1.0, 0.0}, {0.0, 1.0}};
    case 1:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case 2:
      return {{0.0, -1i}, {1i, 0.0}};
    case 3:
      return {{1.0, 0.0}, {0.0, -1.0}};
    default:
      throw std::out_of_range("pauli index must be 0..3");
  }
}

}  // namespace channelforge
