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

// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "channelforge/conversions.hpp"
#include "channelforge/linalg.hpp"
#include "channelforge/lindblad.hpp"
#include "channelforge/properties.hpp"
#include "channelforge/qubit.hpp"
#include "channelforge/sampling.hpp"
#include "channelforge/zoo.hpp"
#include "cli_cases.hpp"
#include "cli_harness.hpp"
#include "oracles.hpp"

using namespace channelforge;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

bool close_all(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (!(std::abs(got[i] - want[i]) <= tol)) return false;
  return true;
}

std::vector<double> choi_spectrum(const Channel& ch) {
  return hermitian_eig(to_choi(ch).matrix()).eigenvalues;  // descending
}

Outcome closed_form_eigenvalues() {
  const bool pancake = close_all(choi_spectrum(zoo::pancake_ncp()), {1.5, 0.5, 0.5, -0.5}, 1e-10);
  const auto sr = choi_spectrum(zoo::spin_reversal());
  const bool reversal = std::any_of(sr.begin(), sr.end(), [](double l) { return std::abs(l + 1) <= 1e-10; });
  const bool identity = close_all(choi_spectrum(zoo::identity()), {2, 0, 0, 0}, 1e-10);
  return {pancake && reversal && identity, "pancake_ncp, spin reversal and identity spectra"};
}

Outcome closed_form_unital() {
  oracle::Source src(1001);
  double worst = 0.0;
  int verdict_mismatch = 0;
  for (int i = 0; i < 1000; ++i) {
    const ScalingParams z(src.uniform(-1, 1), src.uniform(-1, 1), src.uniform(-1, 1));
    auto closed = unital_choi_eigenvalues(z);
    std::vector<double> sorted(closed.begin(), closed.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const Channel ch = channel_from_affine(unital_affine(z));
    const auto numeric = choi_spectrum(ch);
    for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(sorted[k] - numeric[k]));
    const bool closed_cp = sorted.back() >= -1e-9;
    if (closed_cp != check_cp(ch).ok) ++verdict_mismatch;
  }
  return {worst <= 1e-10 && verdict_mismatch == 0,
          "max eigenvalue error " + fmt("%.2e", worst) + ", CP verdict mismatches " +
              std::to_string(verdict_mismatch) + "/1000"};
}

Outcome unit_pancake() {
  const auto unit = unital_choi_eigenvalues({0, 1, 1});
  const double unit_min = *std::min_element(unit.begin(), unit.end());
  const Channel unit_ch = channel_from_affine(unital_affine({0, 1, 1}));
  const bool unit_ok = std::abs(unit_min + 0.5) <= 1e-12 && !check_cp(unit_ch).ok &&
                       std::abs(check_cp(unit_ch).min_eigenvalue + 0.5) <= 1e-12;
  const auto cp = unital_choi_eigenvalues({0.5, 0.5, 0});
  const bool cp_ok = *std::min_element(cp.begin(), cp.end()) >= -1e-12 &&
                     check_cp(zoo::pancake_cp()).ok &&
                     std::abs(check_cp(zoo::pancake_cp()).min_eigenvalue) <= 1e-12;
  return {unit_ok && cp_ok, "unit pancake min eigenvalue " + fmt("%.3g", unit_min)};
}

Outcome conversion_round_trips() {
  oracle::Source src(1004);
  double worst = 0.0, worst_trace = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(src.integer(2, 4));
    const std::size_t env = static_cast<std::size_t>(src.integer(1, static_cast<int>(n * n)));
    const KrausSet k(src.cptp_kraus(n, env));
    const ComplexMatrix ref = oracle::choi_of(
        [&](const ComplexMatrix& r) { return oracle::kraus_apply(k.operators(), r); }, n);
    const auto dist = [&](const Channel& c) {
      worst = std::max(worst, oracle::frobenius(to_choi(c).matrix(), ref));
    };
    const OperatorBasis standard = OperatorBasis::standard(n);
    // Kraus -> A -> B -> chi -> Stinespring -> Kraus
    const SuperopA a = to_superop(k);
    const ChoiB b = b_from_a(a);
    const ChiMatrix chi = chi_from_b(b, standard);
    const StinespringModel s = stinespring_from_kraus(kraus_from_chi(chi));
    const KrausSet k2 = kraus_from_stinespring(s);
    for (const Channel& c : std::vector<Channel>{a, b, chi, s, k2}) dist(c);
    // Kraus -> Stinespring -> chi -> B -> A -> Kraus
    const StinespringModel s2 = to_stinespring(k);
    const ChiMatrix chi2 = to_chi(s2, standard);
    const ChoiB b2 = b_from_chi(chi2);
    const SuperopA a2 = a_from_b(b2);
    const KrausSet k3 = to_kraus(a2);
    for (const Channel& c : std::vector<Channel>{s2, chi2, b2, a2, k3}) dist(c);
    worst_trace = std::max(worst_trace, std::abs(trace(b.matrix()) - double(n)));
  }
  return {worst <= 1e-8 && worst_trace <= 1e-9,
          "max Choi distance " + fmt("%.2e", worst) + ", max |tr B - n| " + fmt("%.2e", worst_trace)};
}

Outcome unitary_freedom() {
  oracle::Source src(1005);
  double worst = 0.0, smallest_list_gap = 1e300;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(src.integer(2, 3));
    const std::size_t count = static_cast<std::size_t>(src.integer(2, 4));
    const KrausSet k(src.cptp_kraus(n, count));
    const KrausSet mixed = remix_kraus(k, src.unitary(count));
    worst = std::max(worst, frobenius_distance(b_from_kraus(k).matrix(), b_from_kraus(mixed).matrix()));
    double gap = 0.0;
    for (std::size_t a = 0; a < count; ++a)
      gap = std::max(gap, max_abs_difference(k.operators()[a], mixed.operators()[a]));
    smallest_list_gap = std::min(smallest_list_gap, gap);
  }
  return {worst <= 1e-10 && smallest_list_gap > 1e-3,
          "max Choi change " + fmt("%.2e", worst) + ", smallest Kraus-list difference " +
              fmt("%.3g", smallest_list_gap)};
}

Outcome zoo_affine_actions() {
  oracle::Source src(1006);
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double p = 0.1 * i;
    const AffineQubit ad = affine_from_channel(zoo::amplitude_damping(p));
    worst = std::max({worst, std::abs(ad.t[0]), std::abs(ad.t[1]), std::abs(ad.t[2] - p)});
    for (int s = 0; s < 100; ++s) {
      const ComplexMatrix rho = src.density(2);
      const BlochVector a = bloch_from_density(rho);
      const BlochVector d = bloch_from_density(apply(zoo::depolarizing(p), rho));
      const BlochVector f = bloch_from_density(apply(zoo::phase_damping(p), rho));
      const BlochVector g = bloch_from_density(apply(zoo::amplitude_damping(p), rho));
      worst = std::max({worst, std::abs(d.a1 - (1 - p) * a.a1), std::abs(d.a2 - (1 - p) * a.a2),
                        std::abs(d.a3 - (1 - p) * a.a3), std::abs(f.a1 - (1 - p) * a.a1),
                        std::abs(f.a2 - (1 - p) * a.a2), std::abs(f.a3 - a.a3),
                        std::abs(g.a3 - (a.a3 * (1 - p) + p))});
    }
  }
  return {worst <= 1e-10, "max Bloch error " + fmt("%.2e", worst)};
}

Outcome stinespring_reduction() {
  oracle::Source src(1007);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(src.integer(2, 3));
    const std::size_t m = static_cast<std::size_t>(src.integer(1, static_cast<int>(n * n)));
    const KrausSet k(src.cptp_kraus(n, m));
    const StinespringModel s = stinespring_from_kraus(k);
    const ComplexMatrix rho = src.density(n);
    // tr_E(U (rho (x) |0><0|) U^dagger) by explicit sums.
    const ComplexMatrix& u = s.unitary();
    ComplexMatrix reduced(n, n);
    for (std::size_t i1 = 0; i1 < n; ++i1)
      for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t e = 0; e < m; ++e)
          for (std::size_t k1 = 0; k1 < n; ++k1)
            for (std::size_t l1 = 0; l1 < n; ++l1)
              reduced(i1, j1) += u(i1 * m + e, k1 * m) * rho(k1, l1) * std::conj(u(j1 * m + e, l1 * m));
    const ComplexMatrix expected = oracle::kraus_apply(k.operators(), rho);
    worst = std::max({worst, max_abs_difference(reduced, expected),
                      max_abs_difference(apply(s, rho), expected)});
  }
  return {worst <= 1e-10, "max deviation " + fmt("%.2e", worst)};
}

Outcome osd_reconstruction() {
  oracle::Source src(1008);
  double worst = 0.0, worst_tp = 0.0;
  int ncp = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(src.integer(2, 3));
    ComplexMatrix b = hermitian_part(src.ginibre(n * n, n * n)) * 0.5;
    b += ComplexMatrix::identity(n * n) * ((double(n) - trace(b).real()) / double(n * n));
    const ChoiB choi(b);
    if (oracle::min_eigenvalue(b) < 0) ++ncp;
    const OSD osd = osd_from_b(choi);
    worst = std::max(worst, max_abs_difference(b_from_osd(osd).matrix(), b));
    worst_tp = std::max(worst_tp, std::abs(check_tp(osd).deviation - check_tp(choi).deviation));
  }
  return {worst <= 1e-10 && worst_tp <= 1e-9 && ncp > 0,
          "rebuild error " + fmt("%.2e", worst) + ", TP deviation mismatch " + fmt("%.2e", worst_tp) +
              ", NCP candidates " + std::to_string(ncp) + "/100"};
}

Outcome lindblad_dynamics() {
  double traj_err = 0.0;
  for (double gamma : {0.5, 1.0, 2.0}) {
    const LindbladGenerator g(ComplexMatrix(2, 2), {pauli(3) * std::sqrt(gamma)});
    const ComplexMatrix plus{{0.5, 0.5}, {0.5, 0.5}};
    const auto traj = evolve(g, plus, {2.0 / gamma, 1000, Scheme::rk4});
    for (const auto& p : traj)
      traj_err = std::max(traj_err, std::abs(p.rho(0, 1) - 0.5 * std::exp(-2 * gamma * p.time)));
  }
  double channel_err = 0.0;
  for (double gt : {0.25, 0.5, 1.0, 2.0}) {
    const LindbladGenerator g(ComplexMatrix(2, 2), {pauli(3)});
    const SuperopA a = channel_from_generator(g, gt, 10000);
    channel_err = std::max(channel_err, choi_distance(a, zoo::phase_damping(1 - std::exp(-2 * gt))));
  }
  oracle::Source src(1009);
  double trace_err = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(src.integer(2, 4));
    std::vector<ComplexMatrix> ls;
    for (int a = src.integer(0, 3); a > 0; --a) ls.push_back(src.ginibre(n, n));
    const LindbladGenerator g(hermitian_part(src.ginibre(n, n)), ls);
    trace_err = std::max(trace_err, std::abs(trace(generator_apply(g, src.density(n)))));
  }
  return {traj_err <= 1e-6 && channel_err <= 1e-5 && trace_err <= 1e-12,
          "trajectory error " + fmt("%.2e", traj_err) + ", channel distance " + fmt("%.2e", channel_err) +
              ", generator trace " + fmt("%.2e", trace_err)};
}

Outcome positivity_vs_cp() {
  const std::uint64_t seed = 10;
  const auto contained = [&](const Channel& ch) {
    const bool probe = probe_positivity_domain(ch, 10000, seed).violations.empty();
    const BlochCloud cloud = bloch_image_sample(ch, 10000, seed, SampleMode::ball);
    return probe && cloud.max_output_radius <= 1 + 1e-9;
  };
  const bool ncp_ok = contained(zoo::pancake_ncp()) && !check_cp(zoo::pancake_ncp()).ok;
  bool cp_ok = true;
  std::vector<Channel> cp_zoo{zoo::identity(), zoo::pancake_cp(), zoo::unitary(zoo::rotation(2, 0.8))};
  for (int i = 0; i <= 10; ++i) {
    cp_zoo.push_back(zoo::depolarizing(0.1 * i));
    cp_zoo.push_back(zoo::phase_damping(0.1 * i));
    cp_zoo.push_back(zoo::amplitude_damping(0.1 * i));
  }
  for (const Channel& ch : cp_zoo) cp_ok = cp_ok && contained(ch) && check_cp(ch).ok;
  return {ncp_ok && cp_ok, "pancake_ncp contained but not CP; " + std::to_string(cp_zoo.size()) +
                               " CP zoo channels contained and CP"};
}

Outcome cli_contract() {
  const cli_harness::Scratch scratch("cf_accept");
  const cli_cases::InputSet inputs(scratch);
  int unstable = 0;
  for (const auto& g : cli_cases::goldens()) {
    const auto args = inputs.resolve(g.args);
    const auto first = cli_harness::run(args);
    const auto second = cli_harness::run(args);
    const auto golden = cli_harness::slurp(std::filesystem::path(CHANNELFORGE_GOLDEN_DIR) / g.golden);
    if (first.code != g.expected_code || first.out != second.out || first.out != golden) ++unstable;
  }
  cli_cases::Fuzzer fuzzer(scratch, inputs, 2024);
  int wrong_exit = 0;
  for (int i = 0; i < 1000; ++i) {
    if (cli_harness::run(fuzzer.next(i).args).code != 2) ++wrong_exit;
  }
  return {unstable == 0 && wrong_exit == 0,
          std::to_string(cli_cases::goldens().size() - unstable) + "/" +
              std::to_string(cli_cases::goldens().size()) + " goldens stable, " +
              std::to_string(1000 - wrong_exit) + "/1000 fuzz cases exit 2"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Choi eigenvalue oracles", closed_form_eigenvalues},
      {"closed-form unital eigenvalues vs numerics", closed_form_unital},
      {"unit-pancake prohibition", unit_pancake},
      {"conversion round trips", conversion_round_trips},
      {"unitary freedom of Kraus sets", unitary_freedom},
      {"zoo affine actions", zoo_affine_actions},
      {"Stinespring reduction", stinespring_reduction},
      {"OSD reconstruction", osd_reconstruction},
      {"Lindblad dynamics", lindblad_dynamics},
      {"positivity vs complete positivity", positivity_vs_cp},
      {"CLI golden files and fuzzing", cli_contract},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
