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

#include "channelforge/conversions.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "channelforge/errors.hpp"
#include "channelforge/linalg.hpp"
#include "channelforge/qubit.hpp"

namespace channelforge {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_state_shape(std::size_t n, const ComplexMatrix& rho) {
  if (rho.rows() != n || rho.cols() != n) {
    throw DimensionError("channel on dimension " + std::to_string(n) + " applied to a " +
                         std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                         " matrix");
  }
}

ComplexMatrix sum_of_projections(const std::vector<ComplexMatrix>& ops, std::size_t n) {
  ComplexMatrix b(n * n, n * n);
  for (const auto& d : ops) {
    const ComplexMatrix v = vec(d);
    b += outer(v, v);
  }
  return b;
}

ComplexMatrix conjugate_sum(const std::vector<ComplexMatrix>& ops, const ComplexMatrix& rho) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& d : ops) out += d * rho * adjoint(d);
  return out;
}

ComplexMatrix gram_sum(const std::vector<ComplexMatrix>& ops, std::size_t n) {
  ComplexMatrix s(n, n);
  for (const auto& d : ops) s += adjoint(d) * d;
  return s;
}

}  // namespace

SuperopA a_from_kraus(const KrausSet& k) {
  const std::size_t n = k.n();
  ComplexMatrix a(n * n, n * n);
  for (const auto& d : k.operators()) a += kron(d, conjugate(d));
  return SuperopA(std::move(a));
}

ChoiB b_from_a(const SuperopA& a) { return ChoiB(reshuffle(a.matrix(), a.n())); }

SuperopA a_from_b(const ChoiB& b) { return SuperopA(reshuffle(b.matrix(), b.n())); }

ChoiB b_from_kraus(const KrausSet& k) { return ChoiB(sum_of_projections(k.operators(), k.n())); }

KrausSet kraus_from_b(const ChoiB& b, double tol) {
  const EigDecomposition eig = hermitian_eig(b.matrix());
  const double smallest = eig.eigenvalues.back();
  if (smallest < -tol) {
    throw NotCompletelyPositiveError(
        "Choi matrix has eigenvalue " + std::to_string(smallest) +
            "; the map is not completely positive (use the OSD form instead)",
        smallest);
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda <= tol) continue;
    ops.push_back(mat(eig.eigenvector(k), b.n()) * std::sqrt(lambda));
  }
  if (ops.empty()) ops.emplace_back(b.n(), b.n());  // the zero map
  return KrausSet(std::move(ops));
}

OSD osd_from_b(const ChoiB& b, double tol) {
  const EigDecomposition eig = hermitian_eig(b.matrix());
  std::vector<ComplexMatrix> positive;
  std::vector<ComplexMatrix> negative;
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda > tol) {
      positive.push_back(mat(eig.eigenvector(k), b.n()) * std::sqrt(lambda));
    } else if (lambda < -tol) {
      negative.push_back(mat(eig.eigenvector(k), b.n()) * std::sqrt(-lambda));
    }
  }
  return OSD(b.n(), std::move(positive), std::move(negative));
}

ChoiB b_from_osd(const OSD& osd) {
  ComplexMatrix b = sum_of_projections(osd.positive_part(), osd.n());
  b -= sum_of_projections(osd.negative_part(), osd.n());
  return ChoiB(std::move(b));
}

ChiMatrix chi_from_kraus(const KrausSet& k, const OperatorBasis& basis) {
  if (basis.n() != k.n()) throw DimensionError("chi_from_kraus: basis dimension mismatch");
  const auto& elems = basis.elements();
  const std::size_t d = elems.size();
  ComplexMatrix chi(d, d);
  for (const auto& op : k.operators()) {
    std::vector<cplx> coeff(d);
    for (std::size_t i = 0; i < d; ++i) coeff[i] = hs_inner(elems[i], op);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) chi(i, j) += coeff[i] * std::conj(coeff[j]);
  }
  return ChiMatrix(basis, std::move(chi));
}

ChiMatrix chi_from_b(const ChoiB& b, const OperatorBasis& basis) {
  if (basis.n() != b.n()) throw DimensionError("chi_from_b: basis dimension mismatch");
  const auto& elems = basis.elements();
  const std::size_t d = elems.size();
  std::vector<ComplexMatrix> vecs;
  vecs.reserve(d);
  for (const auto& e : elems) vecs.push_back(vec(e));
  ComplexMatrix chi(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const ComplexMatrix bj = b.matrix() * vecs[j];
    for (std::size_t i = 0; i < d; ++i) chi(i, j) = hs_inner(vecs[i], bj);
  }
  return ChiMatrix(basis, std::move(chi));
}

ChoiB b_from_chi(const ChiMatrix& chi) {
  const auto& elems = chi.basis().elements();
  const std::size_t n = chi.n();
  const std::size_t d = elems.size();
  std::vector<ComplexMatrix> vecs;
  vecs.reserve(d);
  for (const auto& e : elems) vecs.push_back(vec(e));
  ComplexMatrix b(n * n, n * n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const cplx c = chi.matrix()(i, j);
      if (c == cplx{}) continue;
      b += outer(vecs[i], vecs[j]) * c;
    }
  return ChoiB(std::move(b));
}

KrausSet kraus_from_chi(const ChiMatrix& chi, double tol) {
  const EigDecomposition eig = hermitian_eig(chi.matrix());
  const double smallest = eig.eigenvalues.back();
  if (smallest < -tol) {
    throw NotCompletelyPositiveError(
        "chi matrix has eigenvalue " + std::to_string(smallest) +
            "; the map is not completely positive",
        smallest);
  }
  const auto& elems = chi.basis().elements();
  const std::size_t n = chi.n();
  std::vector<ComplexMatrix> ops;
  for (std::size_t b = 0; b < eig.eigenvalues.size(); ++b) {
    const double lambda = eig.eigenvalues[b];
    if (lambda <= tol) continue;
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < elems.size(); ++i) d += elems[i] * eig.eigenvectors(i, b);
    ops.push_back(d * std::sqrt(lambda));
  }
  if (ops.empty()) ops.emplace_back(n, n);
  return KrausSet(std::move(ops));
}

StinespringModel stinespring_from_kraus(const KrausSet& k, double tp_tol) {
  const std::size_t n = k.n();
  const std::size_t m = k.size();
  const double dev = max_abs_difference(gram_sum(k.operators(), n), ComplexMatrix::identity(n));
  if (dev > tp_tol) {
    throw NotTracePreservingError(
        "Kraus set is not trace preserving (deviation " + std::to_string(dev) +
            "); no isometric dilation exists",
        dev);
  }
  const std::size_t dim = n * m;
  // Isometry columns: U[(i*m + a), (j*m + 0)] = (D_a)_{ij}.
  ComplexMatrix isometry(dim, n);
  for (std::size_t a = 0; a < m; ++a) {
    const auto& d = k.operators()[a];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) isometry(i * m + a, j) = d(i, j);
  }
  ComplexMatrix u(dim, dim);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < dim; ++r) u(r, j * m) = isometry(r, j);
  if (m > 1) {
    const ComplexMatrix rest = orthonormal_complement(isometry);
    std::size_t next = 0;
    for (std::size_t col = 0; col < dim; ++col) {
      if (col % m == 0) continue;
      for (std::size_t r = 0; r < dim; ++r) u(r, col) = rest(r, next);
      ++next;
    }
  }
  return StinespringModel(n, m, std::move(u), 0, std::max(1e-9, 10 * tp_tol));
}

KrausSet kraus_from_stinespring(const StinespringModel& s) {
  std::vector<double> probs(s.env_dim(), 0.0);
  probs[s.env_state_index()] = 1.0;
  return kraus_from_environment(s.unitary(), probs, s.n());
}

KrausSet kraus_from_environment(const ComplexMatrix& u, std::span<const double> env_probs,
                                std::size_t n, double tol) {
  const std::size_t m = env_probs.size();
  if (n == 0 || m == 0 || u.rows() != n * m || u.cols() != n * m) {
    throw DimensionError("kraus_from_environment: unitary must be (n*m) square with n=" +
                         std::to_string(n) + ", m=" + std::to_string(m));
  }
  const double dev = unitarity_deviation(u);
  if (dev > tol) {
    throw NotUnitaryError("kraus_from_environment: matrix is not unitary (deviation " +
                              std::to_string(dev) + ")",
                          dev);
  }
  double total = 0.0;
  for (double p : env_probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("kraus_from_environment: probabilities must be nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    throw std::invalid_argument("kraus_from_environment: probabilities sum to " +
                                std::to_string(total));
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t kp = 0; kp < m; ++kp) {
    if (env_probs[kp] == 0.0) continue;
    const double w = std::sqrt(env_probs[kp]);
    for (std::size_t k = 0; k < m; ++k) {
      ComplexMatrix d(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = w * u(i * m + k, j * m + kp);
      ops.push_back(std::move(d));
    }
  }
  return KrausSet(std::move(ops));
}

KrausSet remix_kraus(const KrausSet& k, const ComplexMatrix& w) {
  if (w.cols() != k.size()) {
    throw DimensionError("remix_kraus: mixing matrix needs " + std::to_string(k.size()) +
                         " columns");
  }
  const std::size_t n = k.n();
  std::vector<ComplexMatrix> ops;
  ops.reserve(w.rows());
  for (std::size_t b = 0; b < w.rows(); ++b) {
    ComplexMatrix d(n, n);
    for (std::size_t a = 0; a < k.size(); ++a) d += k.operators()[a] * w(b, a);
    ops.push_back(std::move(d));
  }
  return KrausSet(std::move(ops));
}

ChoiB to_choi(const Channel& ch) {
  return std::visit(overloaded{
                        [](const SuperopA& a) { return b_from_a(a); },
                        [](const ChoiB& b) { return b; },
                        [](const KrausSet& k) { return b_from_kraus(k); },
                        [](const ChiMatrix& c) { return b_from_chi(c); },
                        [](const OSD& o) { return b_from_osd(o); },
                        [](const StinespringModel& s) {
                          return b_from_kraus(kraus_from_stinespring(s));
                        },
                        [](const AffineQubit& aff) { return choi_from_affine(aff); },
                    },
                    ch);
}

SuperopA to_superop(const Channel& ch) {
  if (const auto* a = std::get_if<SuperopA>(&ch)) return *a;
  if (const auto* k = std::get_if<KrausSet>(&ch)) return a_from_kraus(*k);
  return a_from_b(to_choi(ch));
}

KrausSet to_kraus(const Channel& ch, double tol) {
  if (const auto* k = std::get_if<KrausSet>(&ch)) return *k;
  if (const auto* s = std::get_if<StinespringModel>(&ch)) return kraus_from_stinespring(*s);
  if (const auto* c = std::get_if<ChiMatrix>(&ch)) return kraus_from_chi(*c, tol);
  return kraus_from_b(to_choi(ch), tol);
}

OSD to_osd(const Channel& ch, double tol) {
  if (const auto* o = std::get_if<OSD>(&ch)) return *o;
  return osd_from_b(to_choi(ch), tol);
}

ChiMatrix to_chi(const Channel& ch, const OperatorBasis& basis) {
  if (const auto* k = std::get_if<KrausSet>(&ch)) return chi_from_kraus(*k, basis);
  return chi_from_b(to_choi(ch), basis);
}

StinespringModel to_stinespring(const Channel& ch, double tol) {
  if (const auto* s = std::get_if<StinespringModel>(&ch)) return *s;
  return stinespring_from_kraus(to_kraus(ch, tol));
}

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& rho) {
  require_state_shape(dimension(ch), rho);
  return std::visit(
      overloaded{
          [&](const SuperopA& a) { return mat(a.matrix() * vec(rho), a.n()); },
          [&](const KrausSet& k) { return conjugate_sum(k.operators(), rho); },
          [&](const ChoiB& b) {
            // E(rho) = tr_input((1 (x) rho^T) B); the input index is the second factor.
            const std::size_t n = b.n();
            const ComplexMatrix lifted = kron(ComplexMatrix::identity(n), transpose(rho));
            return partial_trace(lifted * b.matrix(), n, n, Factor::second);
          },
          [&](const OSD& o) {
            ComplexMatrix out = conjugate_sum(o.positive_part(), rho);
            if (!o.negative_part().empty()) out -= conjugate_sum(o.negative_part(), rho);
            return out;
          },
          [&](const ChiMatrix& c) {
            const auto& elems = c.basis().elements();
            ComplexMatrix out(rho.rows(), rho.cols());
            for (std::size_t j = 0; j < elems.size(); ++j) {
              const ComplexMatrix right = rho * adjoint(elems[j]);
              for (std::size_t i = 0; i < elems.size(); ++i) {
                const cplx w = c.matrix()(i, j);
                if (w == cplx{}) continue;
                out += elems[i] * right * w;
              }
            }
            return out;
          },
          [&](const StinespringModel& s) {
            ComplexMatrix env(s.env_dim(), s.env_dim());
            env(s.env_state_index(), s.env_state_index()) = 1.0;
            const ComplexMatrix joint = s.unitary() * kron(rho, env) * adjoint(s.unitary());
            return partial_trace(joint, s.n(), s.env_dim(), Factor::second);
          },
          [&](const AffineQubit& aff) { return apply_affine(aff, rho); },
      },
      ch);
}

ComplexMatrix apply_extended(const Channel& ch, const ComplexMatrix& p, std::size_t aux_dim) {
  const std::size_t n = dimension(ch);
  const std::size_t d = aux_dim;
  if (d == 0 || p.rows() != n * d || p.cols() != n * d) {
    throw DimensionError("apply_extended: operator must be " + std::to_string(n * d) + " square");
  }
  ComplexMatrix out(n * d, n * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      ComplexMatrix block(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) block(i, j) = p(i * d + a, j * d + b);
      const ComplexMatrix image = apply(ch, block);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i * d + a, j * d + b) = image(i, j);
    }
  return out;
}

SuperopA compose(const Channel& first, const Channel& second) {
  const std::size_t n1 = dimension(first);
  const std::size_t n2 = dimension(second);
  if (n1 != n2) {
    throw DimensionError("compose: dimensions " + std::to_string(n1) + " and " +
                         std::to_string(n2) + " differ");
  }
  return SuperopA(to_superop(second).matrix() * to_superop(first).matrix());
}

}  // namespace channelforge
