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
#include <random>

#include "channelforge/channel.hpp"
#include "channelforge/matrix.hpp"
#include "channelforge/qubit.hpp"

namespace channelforge {

/// splitmix64 finalizer applied to (seed, index); gives each sample of a
/// parallel loop an independent, thread-count-free stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded mt19937_64 with hand-rolled distributions, so sampled output is
/// bit-identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, one variate per call).
  double normal();
  /// Real and imaginary parts independent standard normals.
  cplx complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
};

/// i.i.d. complex Gaussian entries.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);
/// Haar unitary: Gram-Schmidt QR of a Ginibre matrix, R with positive diagonal.
ComplexMatrix haar_unitary(std::size_t d, Rng& rng);
/// Normalized complex Gaussian column vector.
ComplexMatrix haar_state(std::size_t d, Rng& rng);
/// G G^dagger / tr(G G^dagger) for a square Ginibre G.
ComplexMatrix random_density_matrix(std::size_t d, Rng& rng);
/// (G + G^dagger) / 2.
ComplexMatrix random_hermitian(std::size_t d, Rng& rng);
/// Reduction of a Haar unitary on (n (x) env_dim) with the environment in |0>.
KrausSet random_cptp(std::size_t n, std::size_t env_dim, Rng& rng);

/// Marsaglia's method.
BlochVector uniform_on_sphere(Rng& rng);
/// Rejection from the enclosing cube.
BlochVector uniform_in_ball(Rng& rng);

}  // namespace channelforge
