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
#include <string_view>
#include <vector>

#include "channelforge/channel.hpp"
#include "channelforge/matrix.hpp"

namespace channelforge {

/// Time-independent Markovian generator with hbar = 1:
///   d rho / dt = -i[H, rho] + sum_a (L_a rho L_a^dagger - {L_a^dagger L_a, rho} / 2).
class LindbladGenerator {
 public:
  /// Throws DimensionError on shape mismatch and NotHermitianError when H
  /// deviates from its adjoint by more than hermiticity_tol.
  LindbladGenerator(ComplexMatrix hamiltonian, std::vector<ComplexMatrix> lindblads,
                    double hermiticity_tol = 1e-9);
  /// The zero generator on dimension n.
  static LindbladGenerator zero(std::size_t n);

  std::size_t n() const noexcept { return hamiltonian_.rows(); }
  const ComplexMatrix& hamiltonian() const noexcept { return hamiltonian_; }
  const std::vector<ComplexMatrix>& lindblads() const noexcept { return lindblads_; }

 private:
  ComplexMatrix hamiltonian_;
  std::vector<ComplexMatrix> lindblads_;
};

enum class Scheme { euler, rk4, kraus_step };

/// "euler", "rk4" or "kraus-step"; throws std::invalid_argument otherwise.
Scheme parse_scheme(std::string_view text);
std::string_view scheme_name(Scheme s);

inline constexpr std::size_t kDefaultTrajectorySteps = 1000;
inline constexpr std::size_t kDefaultChannelSteps = 10000;

struct EvolutionConfig {
  double total_time = 1.0;
  std::size_t steps = kDefaultTrajectorySteps;
  Scheme scheme = Scheme::rk4;
};

/// Right-hand side of the master equation. Traceless and Hermitian for
/// Hermitian rho.
ComplexMatrix generator_apply(const LindbladGenerator& g, const ComplexMatrix& rho);

/// L0 = -1/2 sum L^dagger L.
ComplexMatrix l0_from_lindblads(const LindbladGenerator& g);

/// {1 + (L0 - iH) dt, L_a sqrt(dt)}; trace preserving up to O(dt^2).
KrausSet small_step_kraus(const LindbladGenerator& g, double dt);

/// The generator acting on row-major vec(rho), an n^2 x n^2 matrix.
ComplexMatrix generator_superop(const LindbladGenerator& g);

/// One-step propagator in A-form. euler: 1 + dt G; rk4: the degree-4 Taylor
/// polynomial of exp(dt G) (classical RK4 on a linear ODE); kraus-step: the
/// superoperator of small_step_kraus.
SuperopA step_propagator(const LindbladGenerator& g, double dt, Scheme scheme);

struct TrajectoryPoint {
  double time;
  ComplexMatrix rho;
};

/// steps + 1 points starting at t = 0. Each step is followed by
/// rho <- (rho + rho^dagger) / 2; the trace is never renormalized, so drift
/// stays visible. Throws InvalidStateError when rho0 is not a density matrix
/// and std::invalid_argument on a bad config.
std::vector<TrajectoryPoint> evolve(const LindbladGenerator& g, const ComplexMatrix& rho0,
                                    const EvolutionConfig& cfg);

/// Largest |tr(rho) - 1| along the trajectory; +inf if any entry is not finite.
double max_trace_drift(const std::vector<TrajectoryPoint>& trajectory);

/// The step propagator for dt = t / steps composed steps times.
SuperopA channel_from_generator(const LindbladGenerator& g, double t, std::size_t steps,
                                Scheme scheme = Scheme::rk4);

}  // namespace channelforge
