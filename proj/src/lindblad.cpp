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

#include "channelforge/lindblad.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "channelforge/conversions.hpp"
#include "channelforge/errors.hpp"
#include "channelforge/linalg.hpp"

namespace channelforge {

namespace {

using namespace std::complex_literals;

void require_positive_time(double t, const char* what) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument(std::string(what) + " must be a positive finite time");
  }
}

void require_density_matrix(const ComplexMatrix& rho, std::size_t n) {
  if (rho.rows() != n || rho.cols() != n) {
    throw DimensionError("initial state must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!all_finite(rho)) throw InvalidStateError("initial state has non-finite entries");
  if (hermiticity_deviation(rho) > 1e-9) throw InvalidStateError("initial state is not Hermitian");
  if (std::abs(trace(rho) - 1.0) > 1e-9) throw InvalidStateError("initial state trace is not 1");
  if (hermitian_eig(rho).eigenvalues.back() < -1e-9) {
    throw InvalidStateError("initial state is not positive semidefinite");
  }
}

}  // namespace

LindbladGenerator::LindbladGenerator(ComplexMatrix hamiltonian,
                                     std::vector<ComplexMatrix> lindblads,
                                     double hermiticity_tol)
    : hamiltonian_(std::move(hamiltonian)), lindblads_(std::move(lindblads)) {
  if (hamiltonian_.empty() || !hamiltonian_.is_square()) {
    throw DimensionError("Hamiltonian must be a non-empty square matrix");
  }
  const std::size_t n = hamiltonian_.rows();
  for (const auto& l : lindblads_) {
    if (l.rows() != n || l.cols() != n) {
      throw DimensionError("Lindblad operator must be " + std::to_string(n) + "x" +
                           std::to_string(n));
    }
  }
  const double dev = hermiticity_deviation(hamiltonian_);
  if (dev > hermiticity_tol) throw NotHermitianError("Hamiltonian is not Hermitian", dev);
}

LindbladGenerator LindbladGenerator::zero(std::size_t n) {
  return LindbladGenerator(ComplexMatrix(n, n), {});
}

Scheme parse_scheme(std::string_view text) {
  if (text == "euler") return Scheme::euler;
  if (text == "rk4") return Scheme::rk4;
  if (text == "kraus-step") return Scheme::kraus_step;
  throw std::invalid_argument("scheme must be euler, rk4 or kraus-step, got '" +
                              std::string(text) + "'");
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::euler:
      return "euler";
    case Scheme::rk4:
      return "rk4";
    case Scheme::kraus_step:
      return "kraus-step";
  }
  return "unknown";
}

ComplexMatrix generator_apply(const LindbladGenerator& g, const ComplexMatrix& rho) {
  if (rho.rows() != g.n() || rho.cols() != g.n()) {
    throw DimensionError("generator on dimension " + std::to_string(g.n()) +
                         " applied to a " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + " matrix");
  }
  const ComplexMatrix& h = g.hamiltonian();
  ComplexMatrix out = (h * rho - rho * h) * cplx{0.0, -1.0};
  for (const auto& l : g.lindblads()) {
    const ComplexMatrix ldag = adjoint(l);
    const ComplexMatrix ldl = ldag * l;
    out += l * rho * ldag;
    out -= (ldl * rho + rho * ldl) * 0.5;
  }
  return out;
}

ComplexMatrix l0_from_lindblads(const LindbladGenerator& g) {
  ComplexMatrix l0(g.n(), g.n());
  for (const auto& l : g.lindblads()) l0 -= adjoint(l) * l * 0.5;
  return l0;
}

KrausSet small_step_kraus(const LindbladGenerator& g, double dt) {
  require_positive_time(dt, "dt");
  const std::size_t n = g.n();
  std::vector<ComplexMatrix> ops;
  ops.reserve(g.lindblads().size() + 1);
  ops.push_back(ComplexMatrix::identity(n) +
                (l0_from_lindblads(g) - g.hamiltonian() * 1i) * dt);
  const double root = std::sqrt(dt);
  for (const auto& l : g.lindblads()) ops.push_back(l * root);
  return KrausSet(std::move(ops));
}

ComplexMatrix generator_superop(const LindbladGenerator& g) {
  // vec(X rho Y) = (X (x) Y^T) vec(rho).
  const std::size_t n = g.n();
  const ComplexMatrix one = ComplexMatrix::identity(n);
  const ComplexMatrix& h = g.hamiltonian();
  ComplexMatrix s = (kron(h, one) - kron(one, transpose(h))) * cplx{0.0, -1.0};
  for (const auto& l : g.lindblads()) {
    const ComplexMatrix ldl = adjoint(l) * l;
    s += kron(l, conjugate(l));
    s -= (kron(ldl, one) + kron(one, transpose(ldl))) * 0.5;
  }
  return s;
}

SuperopA step_propagator(const LindbladGenerator& g, double dt, Scheme scheme) {
  require_positive_time(dt, "dt");
  if (scheme == Scheme::kraus_step) return a_from_kraus(small_step_kraus(g, dt));
  const std::size_t d = g.n() * g.n();
  const ComplexMatrix step = generator_superop(g) * dt;
  ComplexMatrix prop = ComplexMatrix::identity(d) + step;
  if (scheme == Scheme::rk4) {
    // Horner form of 1 + X + X^2/2 + X^3/6 + X^4/24.
    ComplexMatrix acc = ComplexMatrix::identity(d) + step * 0.25;
    acc = ComplexMatrix::identity(d) + step * acc * (1.0 / 3.0);
    acc = ComplexMatrix::identity(d) + step * acc * 0.5;
    prop = ComplexMatrix::identity(d) + step * acc;
  }
  return SuperopA(std::move(prop));
}

std::vector<TrajectoryPoint> evolve(const LindbladGenerator& g, const ComplexMatrix& rho0,
                                    const EvolutionConfig& cfg) {
  require_positive_time(cfg.total_time, "total_time");
  if (cfg.steps == 0) throw std::invalid_argument("steps must be at least 1");
  require_density_matrix(rho0, g.n());

  const std::size_t n = g.n();
  const double dt = cfg.total_time / double(cfg.steps);
  const ComplexMatrix prop = step_propagator(g, dt, cfg.scheme).matrix();

  std::vector<TrajectoryPoint> out;
  out.reserve(cfg.steps + 1);
  out.push_back({0.0, rho0});
  ComplexMatrix v = vec(rho0);
  for (std::size_t k = 1; k <= cfg.steps; ++k) {
    const ComplexMatrix rho = hermitian_part(mat(prop * v, n));
    v = vec(rho);
    out.push_back({dt * double(k), rho});
  }
  return out;
}

double max_trace_drift(const std::vector<TrajectoryPoint>& trajectory) {
  double worst = 0.0;
  for (const auto& p : trajectory) {
    if (!all_finite(p.rho)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, std::abs(trace(p.rho) - 1.0));
  }
  return worst;
}

SuperopA channel_from_generator(const LindbladGenerator& g, double t, std::size_t steps,
                                Scheme scheme) {
  require_positive_time(t, "t");
  if (steps == 0) throw std::invalid_argument("steps must be at least 1");
  const ComplexMatrix prop = step_propagator(g, t / double(steps), scheme).matrix();
  ComplexMatrix total = prop;
  for (std::size_t k = 1; k < steps; ++k) total = prop * total;
  return SuperopA(std::move(total));
}

}  // namespace channelforge
