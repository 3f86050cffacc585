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

#include "channelforge/channel.hpp"
#include "channelforge/matrix.hpp"

namespace channelforge {

/// Qubit state coordinates a_i = tr(rho sigma_i); rho = (1 + a . sigma) / 2.
struct BlochVector {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double norm() const;
  Vec3 as_array() const { return {a1, a2, a3}; }
  static BlochVector from_array(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

/// Axis scalings of a unital qubit map, E(sigma_i) = z_i sigma_i, |z_i| <= 1.
struct ScalingParams {
  double z1;
  double z2;
  double z3;
  ScalingParams(double z1, double z2, double z3);
};

BlochVector bloch_from_density(const ComplexMatrix& rho, double tol = 1e-9);
/// Throws InvalidStateError when |a| > 1 + tol.
ComplexMatrix density_from_bloch(const BlochVector& a, double tol = 1e-9);

BlochVector apply_affine(const AffineQubit& aff, const BlochVector& a);
/// Linear extension of the affine action to arbitrary 2x2 matrices:
/// E(1) = 1 + t . sigma, E(sigma_j) = sum_i T_ij sigma_i.
ComplexMatrix apply_affine(const AffineQubit& aff, const ComplexMatrix& m);

/// t_i = tr(sigma_i E(1)) / 2, T_ij = tr(sigma_i E(sigma_j)) / 2.
/// Requires a Hermiticity-preserving, trace-preserving qubit map.
AffineQubit affine_from_channel(const Channel& ch, double tol = 1e-9);

/// Choi matrix sum_ij E(E_ij) (x) E_ij of the affine map (output factor first).
/// For diagonal T and t = 0 this is the familiar
///   1/2 [[1+z3, 0, 0, z1+z2], [0, 1-z3, z1-z2, 0], [0, z1-z2, 1-z3, 0], [z1+z2, 0, 0, 1+z3]].
ChoiB choi_from_affine(const AffineQubit& aff);
Channel channel_from_affine(const AffineQubit& aff);

AffineQubit unital_affine(const ScalingParams& z);

/// Closed-form Choi eigenvalues of the unital map with scalings z:
/// (1+z1-z2-z3)/2, (1-z1+z2-z3)/2, (1-z1-z2+z3)/2, (1+z1+z2+z3)/2.
std::array<double, 4> unital_choi_eigenvalues(const ScalingParams& z);

}  // namespace channelforge
