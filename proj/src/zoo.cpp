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

#include "channelforge/zoo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "channelforge/errors.hpp"
#include "channelforge/linalg.hpp"

namespace channelforge::zoo {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + ": p must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

}  // namespace

KrausSet identity(std::size_t n) { return KrausSet({ComplexMatrix::identity(n)}); }

KrausSet depolarizing(double p) {
  require_probability(p, "depolarizing");
  const double w = std::sqrt(p / 4.0);
  return KrausSet({pauli(0) * std::sqrt(1.0 - 3.0 * p / 4.0), pauli(1) * w, pauli(2) * w,
                   pauli(3) * w});
}

KrausSet phase_damping(double p) {
  require_probability(p, "phase_damping");
  return KrausSet({pauli(0) * std::sqrt(1.0 - p / 2.0), pauli(3) * std::sqrt(p / 2.0)});
}

KrausSet amplitude_damping(double p) {
  require_probability(p, "amplitude_damping");
  return KrausSet({ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}},
                   ComplexMatrix{{0.0, std::sqrt(p)}, {0.0, 0.0}}});
}

KrausSet unitary(const ComplexMatrix& u, double tol) {
  const double dev = unitarity_deviation(u);
  if (dev > tol) {
    throw NotUnitaryError("unitary channel needs a unitary matrix (deviation " +
                              std::to_string(dev) + ")",
                          dev);
  }
  return KrausSet({u});
}

ComplexMatrix rotation(int axis, double angle) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("rotation axis must be 1, 2 or 3");
  using namespace std::complex_literals;
  return pauli(0) * std::cos(angle / 2.0) - pauli(axis) * (1i * std::sin(angle / 2.0));
}

KrausSet pancake_cp() {
  // Canonical operators of the Choi matrix with eigenvalues (1, 1/2, 1/2, 0).
  const double w = std::sqrt(0.5);
  return KrausSet({pauli(0) * w, ComplexMatrix{{0.0, w}, {0.0, 0.0}},
                   ComplexMatrix{{0.0, 0.0}, {w, 0.0}}});
}

ChoiB spin_reversal() {
  return ChoiB(ComplexMatrix{
      {0.0, 0.0, 0.0, -1.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {-1.0, 0.0, 0.0, 0.0}});
}

ChoiB transpose_map() {
  return ChoiB(ComplexMatrix{
      {1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}});
}

ChoiB pancake_ncp() {
  return ChoiB(ComplexMatrix{
      {0.5, 0.0, 0.0, 1.0}, {0.0, 0.5, 0.0, 0.0}, {0.0, 0.0, 0.5, 0.0}, {1.0, 0.0, 0.0, 0.5}});
}

}  // namespace channelforge::zoo
