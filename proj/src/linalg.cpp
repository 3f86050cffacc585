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

#include "channelforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "channelforge/errors.hpp"

namespace channelforge {

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const cplx a = x(i, j);
      if (a == cplx{}) continue;
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l)
          out(i * y.rows() + k, j * y.cols() + l) = a * y(k, l);
    }
  return out;
}

ComplexMatrix vec(const ComplexMatrix& z) {
  auto e = z.entries();
  return ComplexMatrix::column(std::vector<cplx>(e.begin(), e.end()));
}

ComplexMatrix mat(const ComplexMatrix& v, std::size_t n) {
  if (v.cols() != 1 || n == 0 || v.rows() != n * n) {
    throw DimensionError("mat: expected a column of length " + std::to_string(n * n) +
                         ", got " + std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
  }
  auto e = v.entries();
  return ComplexMatrix(n, n, std::vector<cplx>(e.begin(), e.end()));
}

ComplexMatrix reshuffle(const ComplexMatrix& a, std::size_t n) {
  if (n == 0 || a.rows() != n * n || a.cols() != n * n) {
    throw DimensionError("reshuffle: expected an " + std::to_string(n * n) + "x" +
                         std::to_string(n * n) + " matrix");
  }
  ComplexMatrix b(n * n, n * n);
  for (std::size_t ip = 0; ip < n; ++ip)
    for (std::size_t jp = 0; jp < n; ++jp)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(ip * n + i, jp * n + j) = a(ip * n + jp, i * n + j);
  return b;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first,
                            std::size_t dim_second, Factor which) {
  const std::size_t d = dim_first * dim_second;
  if (d == 0 || m.rows() != d || m.cols() != d) {
    throw DimensionError("partial_trace: matrix is not " + std::to_string(d) + "x" +
                         std::to_string(d));
  }
  if (which == Factor::second) {
    ComplexMatrix out(dim_first, dim_first);
    for (std::size_t i = 0; i < dim_first; ++i)
      for (std::size_t j = 0; j < dim_first; ++j)
        for (std::size_t k = 0; k < dim_second; ++k)
          out(i, j) += m(i * dim_second + k, j * dim_second + k);
    return out;
  }
  ComplexMatrix out(dim_second, dim_second);
  for (std::size_t i = 0; i < dim_second; ++i)
    for (std::size_t j = 0; j < dim_second; ++j)
      for (std::size_t k = 0; k < dim_first; ++k)
        out(i, j) += m(k * dim_second + i, k * dim_second + j);
  return out;
}

double unitarity_deviation(const ComplexMatrix& u) {
  if (!u.is_square()) throw DimensionError("unitarity of a non-square matrix");
  return max_abs_difference(adjoint(u) * u, ComplexMatrix::identity(u.rows()));
}

ComplexMatrix EigDecomposition::eigenvector(std::size_t k) const {
  ComplexMatrix v(eigenvectors.rows(), 1);
  for (std::size_t i = 0; i < eigenvectors.rows(); ++i) v(i, 0) = eigenvectors(i, k);
  return v;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// One unitary rotation in the (p, q) plane zeroing h(p, q); v accumulates the
// rotations so that h_original = v diag v^dagger at convergence.
void rotate(ComplexMatrix& h, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx g = h(p, q);
  const double mag = std::abs(g);
  if (mag == 0.0) return;
  const cplx phase = g / mag;  // e^{i phi}
  const double a = h(p, p).real();
  const double b = h(q, q).real();
  const double tau = (b - a) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // J restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
  const cplx jpp = c;
  const cplx jpq = s;
  const cplx jqp = -s * std::conj(phase);
  const cplx jqq = c * std::conj(phase);

  const std::size_t n = h.rows();
  for (std::size_t k = 0; k < n; ++k) {  // h <- h J
    const cplx hp = h(k, p);
    const cplx hq = h(k, q);
    h(k, p) = hp * jpp + hq * jqp;
    h(k, q) = hp * jpq + hq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // h <- J^dagger h
    const cplx hp = h(p, k);
    const cplx hq = h(q, k);
    h(p, k) = std::conj(jpp) * hp + std::conj(jqp) * hq;
    h(q, k) = std::conj(jpq) * hp + std::conj(jqq) * hq;
  }
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();
  for (std::size_t k = 0; k < n; ++k) {  // v <- v J
    const cplx vp = v(k, p);
    const cplx vq = v(k, q);
    v(k, p) = vp * jpp + vq * jqp;
    v(k, q) = vp * jpq + vq * jqq;
  }
}

}  // namespace

EigDecomposition hermitian_eig(const ComplexMatrix& h, double hermiticity_tol) {
  JacobiOptions options;
  options.hermiticity_tol = hermiticity_tol;
  return hermitian_eig(h, options);
}

EigDecomposition hermitian_eig(const ComplexMatrix& h, const JacobiOptions& options) {
  if (!h.is_square()) throw DimensionError("hermitian_eig: matrix is not square");
  if (!all_finite(h)) throw std::domain_error("hermitian_eig: non-finite entries");
  const double deviation = hermiticity_deviation(h);
  if (deviation > options.hermiticity_tol) {
    throw NotHermitianError("hermitian_eig: matrix deviates from Hermitian by " +
                                std::to_string(deviation),
                            deviation);
  }
  const std::size_t n = h.rows();
  ComplexMatrix work = hermitian_part(h);
  ComplexMatrix vectors = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, frobenius_norm(work));

  int sweep = 0;
  while (off_diagonal_norm(work) > options.off_diagonal_threshold * scale) {
    if (sweep++ >= options.max_sweeps) {
      throw ConvergenceError("hermitian_eig: no convergence after " +
                             std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(work, vectors, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return work(a, a).real() > work(b, b).real();
  });

  EigDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues.push_back(work(src, src).real());
    // Phase convention: first component with modulus above 1e-12 is real positive.
    cplx phase = 1.0;
    std::size_t lead = n;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(vectors(i, src));
      if (m > 1e-12) {
        phase = std::conj(vectors(i, src)) / m;
        lead = i;
        break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = vectors(i, src) * phase;
    if (lead < n) out.eigenvectors(lead, k) = std::abs(vectors(lead, src));
  }

  const ComplexMatrix hh = hermitian_part(h);
  for (std::size_t k = 0; k < n; ++k) {
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx acc = -out.eigenvalues[k] * out.eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j) acc += hh(i, j) * out.eigenvectors(j, k);
      r += std::norm(acc);
    }
    out.residual = std::max(out.residual, std::sqrt(r));
  }
  return out;
}

ComplexMatrix orthonormal_complement(const ComplexMatrix& isometry) {
  const std::size_t dim = isometry.rows();
  const std::size_t have = isometry.cols();
  if (have > dim) throw DimensionError("orthonormal_complement: more columns than rows");
  if (have == dim) return {};

  std::vector<std::vector<cplx>> basis;
  basis.reserve(dim);
  for (std::size_t c = 0; c < have; ++c) {
    std::vector<cplx> col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = isometry(i, c);
    basis.push_back(std::move(col));
  }

  auto residual_of = [&](std::size_t index) {
    std::vector<cplx> r(dim);
    r[index] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
      for (const auto& q : basis) {
        cplx proj{};
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(q[i]) * r[i];
        for (std::size_t i = 0; i < dim; ++i) r[i] -= proj * q[i];
      }
    }
    return r;
  };
  auto norm_of = [](const std::vector<cplx>& r) {
    double s = 0.0;
    for (const auto& e : r) s += std::norm(e);
    return std::sqrt(s);
  };

  ComplexMatrix out(dim, dim - have);
  for (std::size_t added = 0; added < dim - have; ++added) {
    std::vector<cplx> best;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < dim; ++c) {
      auto r = residual_of(c);
      const double nr = norm_of(r);
      if (nr > best_norm + 1e-12) {
        best_norm = nr;
        best = std::move(r);
      }
    }
    for (auto& e : best) e /= best_norm;
    for (std::size_t i = 0; i < dim; ++i) out(i, added) = best[i];
    basis.push_back(std::move(best));
  }
  return out;
}

}  // namespace channelforge
