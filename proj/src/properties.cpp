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

#include "channelforge/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "channelforge/conversions.hpp"
#include "channelforge/errors.hpp"
#include "channelforge/linalg.hpp"
#include "channelforge/qubit.hpp"
#include "channelforge/random.hpp"

namespace channelforge {

namespace {

ComplexMatrix gram(const std::vector<ComplexMatrix>& ops, std::size_t n, bool dagger_first) {
  ComplexMatrix s(n, n);
  for (const auto& d : ops) s += dagger_first ? adjoint(d) * d : d * adjoint(d);
  return s;
}

double tp_deviation(const Channel& ch) {
  const std::size_t n = dimension(ch);
  const ComplexMatrix one = ComplexMatrix::identity(n);
  if (const auto* k = std::get_if<KrausSet>(&ch)) {
    return max_abs_difference(gram(k->operators(), n, true), one);
  }
  if (const auto* o = std::get_if<OSD>(&ch)) {
    return max_abs_difference(
        gram(o->positive_part(), n, true) - gram(o->negative_part(), n, true), one);
  }
  if (const auto* a = std::get_if<SuperopA>(&ch)) {
    // max_ij |sum_i' A[(i' i'), (i j)] - delta_ij|
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cplx s{};
        for (std::size_t ip = 0; ip < n; ++ip) s += a->matrix()(ip * n + ip, i * n + j);
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    return worst;
  }
  if (const auto* c = std::get_if<ChiMatrix>(&ch)) {
    const auto& elems = c->basis().elements();
    ComplexMatrix s(n, n);
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        const cplx w = c->matrix()(i, j);
        if (w != cplx{}) s += adjoint(elems[j]) * elems[i] * w;
      }
    return max_abs_difference(s, one);
  }
  if (const auto* s = std::get_if<StinespringModel>(&ch)) {
    return max_abs_difference(gram(kraus_from_stinespring(*s).operators(), n, true), one);
  }
  const ChoiB b = to_choi(ch);
  return max_abs_difference(partial_trace(b.matrix(), n, n, Factor::first), one);
}

double unital_deviation(const Channel& ch) {
  const std::size_t n = dimension(ch);
  const ComplexMatrix one = ComplexMatrix::identity(n);
  if (const auto* k = std::get_if<KrausSet>(&ch)) {
    return max_abs_difference(gram(k->operators(), n, false), one);
  }
  if (const auto* o = std::get_if<OSD>(&ch)) {
    return max_abs_difference(
        gram(o->positive_part(), n, false) - gram(o->negative_part(), n, false), one);
  }
  const ChoiB b = to_choi(ch);
  return max_abs_difference(partial_trace(b.matrix(), n, n, Factor::second), one);
}

double min_eigenvalue_of_hermitian_part(const ComplexMatrix& m) {
  return hermitian_eig(hermitian_part(m)).eigenvalues.back();
}

}  // namespace

CheckResult check_tp(const Channel& ch, double tol) {
  const double dev = tp_deviation(ch);
  return {dev <= tol, dev};
}

CheckResult check_unital(const Channel& ch, double tol) {
  const double dev = unital_deviation(ch);
  return {dev <= tol, dev};
}

CheckResult check_hermiticity_preserving(const Channel& ch, double tol) {
  const double dev = hermiticity_deviation(to_choi(ch).matrix());
  return {dev <= tol, dev};
}

CpResult check_cp(const Channel& ch, double tol) {
  const ChoiB b = to_choi(ch);
  const double herm = hermiticity_deviation(b.matrix());
  const double smallest = min_eigenvalue_of_hermitian_part(b.matrix());
  return {herm <= tol && smallest >= -tol, smallest};
}

std::size_t kraus_rank(const Channel& ch, double tol) {
  const EigDecomposition eig = hermitian_eig(hermitian_part(to_choi(ch).matrix()));
  return static_cast<std::size_t>(std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                                                [&](double l) { return std::abs(l) > tol; }));
}

ComplexMatrix choi_state(const Channel& ch, double tol) {
  const CpResult cp = check_cp(ch, tol);
  if (!cp.ok) {
    throw NotCompletelyPositiveError("Choi-Jamiolkowski state needs a completely positive map",
                                     cp.min_eigenvalue);
  }
  const CheckResult tp = check_tp(ch, tol);
  if (!tp.ok) {
    throw NotTracePreservingError("Choi-Jamiolkowski state needs a trace-preserving map",
                                  tp.deviation);
  }
  const ChoiB b = to_choi(ch);
  return b.matrix() * (1.0 / double(b.n()));
}

double choi_distance(const Channel& a, const Channel& b) {
  if (dimension(a) != dimension(b)) {
    throw DimensionError("cannot compare channels on dimensions " +
                         std::to_string(dimension(a)) + " and " + std::to_string(dimension(b)));
  }
  return frobenius_distance(to_choi(a).matrix(), to_choi(b).matrix());
}

bool same_channel(const Channel& a, const Channel& b, double tol) {
  return choi_distance(a, b) <= tol;
}

ValidationReport validate(const Channel& ch, double tol) {
  ValidationReport r;
  r.tolerance_used = tol;
  const ChoiB b = to_choi(ch);
  r.hermiticity_deviation = hermiticity_deviation(b.matrix());
  r.hermiticity_preserving = r.hermiticity_deviation <= tol;
  r.trace_deviation = tp_deviation(ch);
  r.trace_preserving = r.trace_deviation <= tol;
  const EigDecomposition eig = hermitian_eig(hermitian_part(b.matrix()));
  r.min_choi_eigenvalue = eig.eigenvalues.back();
  r.completely_positive = r.hermiticity_preserving && r.min_choi_eigenvalue >= -tol;
  r.unital_deviation = unital_deviation(ch);
  r.unital = r.unital_deviation <= tol;
  r.kraus_rank = static_cast<std::size_t>(
      std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                    [](double l) { return std::abs(l) > 1e-10; }));
  r.choi_trace = trace(b.matrix()).real();
  return r;
}

namespace {

struct ProbeSample {
  ComplexMatrix input;
  double min_eigenvalue;
};

ProbeSample probe_one(const SuperopA& a, std::size_t n, std::uint64_t seed, std::size_t index) {
  Rng rng(derive_seed(seed, index));
  ComplexMatrix rho = n == 2 ? density_from_bloch(uniform_in_ball(rng))
                             : [&] {
                                 const ComplexMatrix psi = haar_state(n, rng);
                                 return outer(psi, psi);
                               }();
  const ComplexMatrix out = mat(a.matrix() * vec(rho), n);
  return {std::move(rho), min_eigenvalue_of_hermitian_part(out)};
}

DomainProbeResult collect(std::vector<ProbeSample>& samples, double tol) {
  DomainProbeResult result;
  result.samples_tested = samples.size();
  for (auto& s : samples) {
    if (s.min_eigenvalue < -tol) result.violations.push_back({std::move(s.input), s.min_eigenvalue});
  }
  return result;
}

}  // namespace

DomainProbeResult probe_positivity_domain(const Channel& ch, std::size_t n_samples,
                                          std::uint64_t seed, double tol) {
  const SuperopA a = to_superop(ch);
  const std::size_t n = a.n();
  std::vector<ProbeSample> samples(n_samples);
  const auto count = static_cast<std::int64_t>(n_samples);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    samples[static_cast<std::size_t>(i)] = probe_one(a, n, seed, static_cast<std::size_t>(i));
  }
  return collect(samples, tol);
}

DomainProbeResult probe_positivity_domain_serial(const Channel& ch, std::size_t n_samples,
                                                 std::uint64_t seed, double tol) {
  const SuperopA a = to_superop(ch);
  const std::size_t n = a.n();
  std::vector<ProbeSample> samples(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) samples[i] = probe_one(a, n, seed, i);
  return collect(samples, tol);
}

}  // namespace channelforge
