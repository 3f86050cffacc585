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

#include "channelforge/channel.hpp"

#include <cmath>
#include <string>

#include "channelforge/errors.hpp"
#include "channelforge/linalg.hpp"

namespace channelforge {

namespace {

// n such that rows == cols == n^2, else DimensionError.
std::size_t system_dim_of_superop(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + " must be square");
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(m.rows()))));
  if (n * n != m.rows()) {
    throw DimensionError(std::string(what) + " dimension " + std::to_string(m.rows()) +
                         " is not a perfect square");
  }
  return n;
}

void require_operators(const std::vector<ComplexMatrix>& ops, std::size_t n, const char* what) {
  for (const auto& op : ops) {
    if (op.rows() != n || op.cols() != n) {
      throw DimensionError(std::string(what) + ": operator is " + std::to_string(op.rows()) +
                           "x" + std::to_string(op.cols()) + ", expected " +
                           std::to_string(n) + "x" + std::to_string(n));
    }
  }
}

}  // namespace

SuperopA::SuperopA(ComplexMatrix matrix)
    : n_(system_dim_of_superop(matrix, "superoperator")), matrix_(std::move(matrix)) {}

ChoiB::ChoiB(ComplexMatrix matrix)
    : n_(system_dim_of_superop(matrix, "Choi matrix")), matrix_(std::move(matrix)) {}

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw DimensionError("Kraus set must not be empty");
  n_ = operators_.front().rows();
  if (n_ == 0) throw DimensionError("Kraus operators must be non-empty");
  require_operators(operators_, n_, "Kraus set");
}

OSD::OSD(std::size_t n, std::vector<ComplexMatrix> positive_part,
         std::vector<ComplexMatrix> negative_part)
    : n_(n), positive_(std::move(positive_part)), negative_(std::move(negative_part)) {
  if (n_ == 0) throw DimensionError("OSD dimension must be positive");
  require_operators(positive_, n_, "OSD positive part");
  require_operators(negative_, n_, "OSD negative part");
}

OperatorBasis::OperatorBasis(std::vector<ComplexMatrix> elements, std::string name, double tol)
    : elements_(std::move(elements)), name_(std::move(name)) {
  if (elements_.empty()) throw BasisError("operator basis must not be empty");
  n_ = elements_.front().rows();
  const std::size_t count = elements_.size();
  if (n_ == 0 || count != n_ * n_) {
    throw BasisError("operator basis needs n^2 elements, got " + std::to_string(count));
  }
  for (const auto& e : elements_) {
    if (e.rows() != n_ || e.cols() != n_) throw BasisError("basis element has wrong shape");
  }
  for (std::size_t j = 0; j < count; ++j)
    for (std::size_t k = j; k < count; ++k) {
      const cplx g = hs_inner(elements_[j], elements_[k]);
      const double expected = j == k ? 1.0 : 0.0;
      if (std::abs(g - expected) > tol) {
        throw BasisError("operator basis is not orthonormal: tr(A_" + std::to_string(j) +
                         "^dagger A_" + std::to_string(k) + ") = " +
                         std::to_string(g.real()) + "+" + std::to_string(g.imag()) + "i");
      }
    }
}

OperatorBasis OperatorBasis::standard(std::size_t n) {
  std::vector<ComplexMatrix> units;
  units.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ComplexMatrix e(n, n);
      e(i, j) = 1.0;
      units.push_back(std::move(e));
    }
  return OperatorBasis(std::move(units), "standard");
}

OperatorBasis OperatorBasis::pauli() {
  std::vector<ComplexMatrix> elements;
  for (int k = 0; k < 4; ++k) elements.push_back(channelforge::pauli(k) * (1.0 / std::sqrt(2.0)));
  return OperatorBasis(std::move(elements), "pauli");
}

ChiMatrix::ChiMatrix(OperatorBasis basis, ComplexMatrix matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  const std::size_t d = basis_.elements().size();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionError("chi matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  }
}

StinespringModel::StinespringModel(std::size_t n, std::size_t env_dim, ComplexMatrix unitary,
                                   std::size_t env_state_index, double unitarity_tol)
    : n_(n), env_dim_(env_dim), unitary_(std::move(unitary)), env_state_index_(env_state_index) {
  if (n_ == 0 || env_dim_ == 0) throw DimensionError("Stinespring dimensions must be positive");
  if (unitary_.rows() != n_ * env_dim_ || unitary_.cols() != n_ * env_dim_) {
    throw DimensionError("Stinespring unitary must be " + std::to_string(n_ * env_dim_) +
                         " square");
  }
  if (env_state_index_ >= env_dim_) throw DimensionError("env_state_index out of range");
  const double dev = unitarity_deviation(unitary_);
  if (dev > unitarity_tol) {
    throw NotUnitaryError("Stinespring matrix is not unitary (deviation " +
                              std::to_string(dev) + ")",
                          dev);
  }
}

std::size_t dimension(const Channel& ch) {
  return std::visit(
      [](const auto& rep) -> std::size_t {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, AffineQubit>) {
          return 2;
        } else {
          return rep.n();
        }
      },
      ch);
}

std::string kind_name(const Channel& ch) {
  static const char* const names[] = {"superop", "choi",        "kraus",       "chi",
                                      "osd",     "stinespring", "affine-qubit"};
  return names[ch.index()];
}

}  // namespace channelforge
