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
#include <cstdint>
#include <vector>

#include "channelforge/channel.hpp"
#include "channelforge/matrix.hpp"

namespace channelforge {

/// Eigenvalues >= -kPsdTol count as nonnegative in every CP test.
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kSameChannelTol = 1e-8;

struct CheckResult {
  bool ok = false;
  double deviation = 0.0;
  explicit operator bool() const noexcept { return ok; }
};

struct CpResult {
  bool ok = false;
  double min_eigenvalue = 0.0;
  explicit operator bool() const noexcept { return ok; }
};

/// Deviations are entrywise maxima, e.g. max |sum D^dagger D - 1|.
CheckResult check_tp(const Channel& ch, double tol = kPsdTol);
CheckResult check_unital(const Channel& ch, double tol = kPsdTol);
CheckResult check_hermiticity_preserving(const Channel& ch, double tol = kPsdTol);
/// Smallest eigenvalue of the Hermitian part of the Choi matrix; a map whose
/// Choi matrix is not Hermitian within tol is never reported CP.
CpResult check_cp(const Channel& ch, double tol = kPsdTol);

/// Number of Choi eigenvalues with |lambda| > tol.
std::size_t kraus_rank(const Channel& ch, double tol = 1e-10);

/// B / n. Throws NotCompletelyPositiveError or NotTracePreservingError.
ComplexMatrix choi_state(const Channel& ch, double tol = kPsdTol);

/// Frobenius distance of the Choi matrices <= tol. Throws DimensionError.
bool same_channel(const Channel& a, const Channel& b, double tol = kSameChannelTol);
double choi_distance(const Channel& a, const Channel& b);

struct ValidationReport {
  bool hermiticity_preserving = false;
  double hermiticity_deviation = 0.0;
  bool trace_preserving = false;
  double trace_deviation = 0.0;
  bool completely_positive = false;
  double min_choi_eigenvalue = 0.0;
  bool unital = false;
  double unital_deviation = 0.0;
  std::size_t kraus_rank = 0;
  double choi_trace = 0.0;
  double tolerance_used = 0.0;
};

ValidationReport validate(const Channel& ch, double tol = kPsdTol);

struct DomainViolation {
  ComplexMatrix input;
  double min_output_eigenvalue;
};

struct DomainProbeResult {
  std::size_t samples_tested = 0;
  std::vector<DomainViolation> violations;  // in sample order
};

/// Samples input states and records those mapped to a matrix with an
/// eigenvalue below -tol. Qubit maps draw mixed states uniformly from the Bloch
/// ball; larger systems draw Haar-random pure states. Sample i uses its own
/// generator derived from (seed, i), so the result does not depend on the
/// thread count. OpenMP-parallel when built with it.
DomainProbeResult probe_positivity_domain(const Channel& ch, std::size_t n_samples,
                                          std::uint64_t seed, double tol = kPsdTol);
/// Single-threaded reference of probe_positivity_domain; same output.
DomainProbeResult probe_positivity_domain_serial(const Channel& ch, std::size_t n_samples,
                                                 std::uint64_t seed, double tol = kPsdTol);

}  // namespace channelforge
