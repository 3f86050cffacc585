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

#include "channelforge/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "channelforge/conversions.hpp"

namespace channelforge {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (auto& e : g.entries()) e = rng.complex_normal();
  return g;
}

ComplexMatrix haar_unitary(std::size_t d, Rng& rng) {
  ComplexMatrix q = ginibre(d, d, rng);
  for (std::size_t k = 0; k < d; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        cplx proj{};
        for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, j)) * q(i, k);
        for (std::size_t i = 0; i < d; ++i) q(i, k) -= proj * q(i, j);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += std::norm(q(i, k));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < d; ++i) q(i, k) /= norm;
  }
  return q;
}

ComplexMatrix haar_state(std::size_t d, Rng& rng) {
  ComplexMatrix v = ginibre(d, 1, rng);
  return v * (1.0 / frobenius_norm(v));
}

ComplexMatrix random_density_matrix(std::size_t d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  ComplexMatrix rho = g * adjoint(g);
  return rho * (1.0 / trace(rho).real());
}

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  return hermitian_part(ginibre(d, d, rng));
}

KrausSet random_cptp(std::size_t n, std::size_t env_dim, Rng& rng) {
  std::vector<double> probs(env_dim, 0.0);
  probs[0] = 1.0;
  return kraus_from_environment(haar_unitary(n * env_dim, rng), probs, n);
}

BlochVector uniform_on_sphere(Rng& rng) {
  for (;;) {
    const double x1 = rng.uniform(-1.0, 1.0);
    const double x2 = rng.uniform(-1.0, 1.0);
    const double s = x1 * x1 + x2 * x2;
    if (s >= 1.0) continue;
    const double root = std::sqrt(1.0 - s);
    return {2.0 * x1 * root, 2.0 * x2 * root, 1.0 - 2.0 * s};
  }
}

BlochVector uniform_in_ball(Rng& rng) {
  for (;;) {
    const BlochVector a{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    if (a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3 <= 1.0) return a;
  }
}

}  // namespace channelforge
