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

#include "channelforge/qubit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "channelforge/conversions.hpp"
#include "channelforge/errors.hpp"
#include "channelforge/linalg.hpp"

namespace channelforge {

double BlochVector::norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }

ScalingParams::ScalingParams(double z1_, double z2_, double z3_) : z1(z1_), z2(z2_), z3(z3_) {
  for (double z : {z1, z2, z3}) {
    if (!(std::abs(z) <= 1.0)) {
      throw std::invalid_argument("scaling parameters must satisfy |z| <= 1, got " +
                                  std::to_string(z));
    }
  }
}

BlochVector bloch_from_density(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != 2 || rho.cols() != 2) throw DimensionError("Bloch vector needs a 2x2 matrix");
  const double herm = hermiticity_deviation(rho);
  if (herm > tol) throw NotHermitianError("density matrix is not Hermitian", herm);
  const cplx tr = trace(rho);
  if (std::abs(tr - 1.0) > tol) {
    throw InvalidStateError("density matrix trace is " + std::to_string(tr.real()) +
                            ", expected 1");
  }
  return {trace(rho * pauli(1)).real(), trace(rho * pauli(2)).real(),
          trace(rho * pauli(3)).real()};
}

ComplexMatrix density_from_bloch(const BlochVector& a, double tol) {
  const double r = a.norm();
  if (!(r <= 1.0 + tol)) {
    throw InvalidStateError("Bloch vector of length " + std::to_string(r) +
                            " lies outside the unit ball");
  }
  using namespace std::complex_literals;
  return {{0.5 * (1.0 + a.a3), 0.5 * (a.a1 - 1i * a.a2)},
          {0.5 * (a.a1 + 1i * a.a2), 0.5 * (1.0 - a.a3)}};
}

BlochVector apply_affine(const AffineQubit& aff, const BlochVector& a) {
  const Vec3 in = a.as_array();
  Vec3 out = aff.t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += aff.T[i][j] * in[j];
  return BlochVector::from_array(out);
}

ComplexMatrix apply_affine(const AffineQubit& aff, const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw DimensionError("affine qubit map applied to a non-2x2 matrix");
  }
  // m = (c0 1 + sum_j c_j sigma_j) / 2 with c_mu = tr(sigma_mu m).
  cplx c[4];
  for (int mu = 0; mu < 4; ++mu) c[mu] = trace(pauli(mu) * m);
  ComplexMatrix out = pauli(0) * c[0];
  for (int i = 0; i < 3; ++i) {
    cplx coeff = c[0] * aff.t[i];
    for (int j = 0; j < 3; ++j) coeff += aff.T[i][j] * c[j + 1];
    out += pauli(i + 1) * coeff;
  }
  return out * 0.5;
}

AffineQubit affine_from_channel(const Channel& ch, double tol) {
  if (dimension(ch) != 2) throw DimensionError("affine form exists for qubit maps only");
  if (const auto* aff = std::get_if<AffineQubit>(&ch)) return *aff;

  const ChoiB b = to_choi(ch);
  const double herm = hermiticity_deviation(b.matrix());
  if (herm > tol) throw NotHermitianError("map does not preserve Hermiticity", herm);
  const double tp = max_abs_difference(partial_trace(b.matrix(), 2, 2, Factor::first),
                                       ComplexMatrix::identity(2));
  if (tp > tol) {
    throw NotTracePreservingError("affine form requires a trace-preserving map", tp);
  }

  AffineQubit aff;
  const ComplexMatrix image_of_one = apply(ch, pauli(0));
  for (int i = 0; i < 3; ++i) aff.t[i] = 0.5 * trace(pauli(i + 1) * image_of_one).real();
  for (int j = 0; j < 3; ++j) {
    const ComplexMatrix image = apply(ch, pauli(j + 1));
    for (int i = 0; i < 3; ++i) aff.T[i][j] = 0.5 * trace(pauli(i + 1) * image).real();
  }
  return aff;
}

ChoiB choi_from_affine(const AffineQubit& aff) {
  ComplexMatrix b(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      ComplexMatrix unit(2, 2);
      unit(i, j) = 1.0;
      const ComplexMatrix image = apply_affine(aff, unit);
      for (std::size_t ip = 0; ip < 2; ++ip)
        for (std::size_t jp = 0; jp < 2; ++jp) b(ip * 2 + i, jp * 2 + j) = image(ip, jp);
    }
  return ChoiB(std::move(b));
}

Channel channel_from_affine(const AffineQubit& aff) { return choi_from_affine(aff); }

AffineQubit unital_affine(const ScalingParams& z) {
  AffineQubit aff;
  aff.T[0][0] = z.z1;
  aff.T[1][1] = z.z2;
  aff.T[2][2] = z.z3;
  return aff;
}

std::array<double, 4> unital_choi_eigenvalues(const ScalingParams& z) {
  return {0.5 * (1.0 + z.z1 - z.z2 - z.z3), 0.5 * (1.0 - z.z1 + z.z2 - z.z3),
          0.5 * (1.0 - z.z1 - z.z2 + z.z3), 0.5 * (1.0 + z.z1 + z.z2 + z.z3)};
}

}  // namespace channelforge
