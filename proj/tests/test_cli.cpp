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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "channelforge/conversions.hpp"
#include "channelforge/properties.hpp"
#include "channelforge/serialize.hpp"
#include "channelforge/zoo.hpp"
#include "cli_cases.hpp"
#include "cli_harness.hpp"

using namespace channelforge;
using cli_harness::run;

namespace {

const std::filesystem::path kGoldenDir = CHANNELFORGE_GOLDEN_DIR;

bool updating_goldens() {
  const char* env = std::getenv("CHANNELFORGE_UPDATE_GOLDEN");
  return env != nullptr && std::string(env) == "1";
}

double summary_field(const std::string& err, const std::string& key) {
  const std::size_t pos = err.find(key + "=");
  REQUIRE(pos != std::string::npos);
  return std::strtod(err.c_str() + pos + key.size() + 1, nullptr);
}

}  // namespace

TEST_CASE("golden outputs are byte stable") {
  const cli_harness::Scratch scratch("cf_golden");
  const cli_cases::InputSet inputs(scratch);
  for (const auto& g : cli_cases::goldens()) {
    CAPTURE(g.golden);
    const auto args = inputs.resolve(g.args);
    const auto first = run(args);
    const auto second = run(args);
    CHECK(first.code == g.expected_code);
    CHECK(first.out == second.out);
    const auto path = kGoldenDir / g.golden;
    if (updating_goldens()) {
      std::ofstream(path, std::ios::binary) << first.out;
      continue;
    }
    REQUIRE(std::filesystem::exists(path));
    CHECK(first.out == cli_harness::slurp(path));
  }
}

TEST_CASE("malformed inputs always exit 2") {
  const cli_harness::Scratch scratch("cf_fuzz");
  const cli_cases::InputSet inputs(scratch);
  cli_cases::Fuzzer fuzzer(scratch, inputs, 2024);
  for (int i = 0; i < 1000; ++i) {
    const auto c = fuzzer.next(i);
    const auto r = run(c.args);
    INFO(c.description, " ", r.err);
    CHECK(r.code == 2);
  }
}

TEST_CASE("help and version succeed") {
  CHECK(run({"--help"}).code == 0);
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("channelforge") != std::string::npos);
}

TEST_CASE("validate") {
  const cli_harness::Scratch scratch("cf_validate");
  const auto dep = scratch.write("dep.json", run({"zoo", "depolarizing", "--p", "0.3"}).out);
  const auto r = run({"validate", dep});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"completely_positive\": true") != std::string::npos);

  const auto ncp = scratch.write("ncp.json", run({"zoo", "pancake-ncp"}).out);
  const auto bad = run({"validate", ncp});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"min_choi_eigenvalue\": -0.4999999999999") != std::string::npos);

  const auto half = scratch.write(
      "half.json",
      channel_to_json(KrausSet({pauli(0) * 0.5})));
  CHECK(run({"validate", half}).code == 1);
  CHECK(run({"validate", half, "--tol", "0.8"}).code == 0);
  CHECK(run({"props", ncp}).code == 0);
  const auto probe = run({"props", ncp, "--probe", "500", "--seed", "3"});
  CHECK(probe.err.find("0 of 500") != std::string::npos);
}

TEST_CASE("convert") {
  const cli_harness::Scratch scratch("cf_convert");
  const auto ad = scratch.write("ad.json", run({"zoo", "amplitude-damping", "--p", "0.4"}).out);
  const Channel original = zoo::amplitude_damping(0.4);
  for (const char* to : {"kraus", "choi", "superop", "chi", "stinespring", "osd", "affine-qubit"}) {
    CAPTURE(to);
    const auto r = run({"convert", ad, "--to", to});
    REQUIRE(r.code == 0);
    const Channel back = channel_from_json(r.out);
    CHECK(kind_name(back) == to);
    CHECK(choi_distance(back, original) <= 1e-8);
    // Round trip through the other direction as well.
    const auto file = scratch.write(std::string("ad_") + to + ".json", r.out);
    const auto again = run({"convert", file, "--to", "kraus"});
    REQUIRE(again.code == 0);
    CHECK(choi_distance(channel_from_json(again.out), original) <= 1e-8);
  }

  const auto choi = run({"convert", ad, "--to", "choi"});
  const auto chi = run({"convert", ad, "--to", "chi", "--basis", "standard"});
  CHECK(std::get<ChiMatrix>(channel_from_json(chi.out)).matrix() ==
        std::get<ChoiB>(channel_from_json(choi.out)).matrix());

  const auto ncp = scratch.write("ncp.json", run({"zoo", "pancake-ncp"}).out);
  const auto refused = run({"convert", ncp, "--to", "kraus"});
  CHECK(refused.code == 1);
  CHECK(refused.err.find("--to osd") != std::string::npos);
  CHECK(run({"convert", ncp, "--to", "osd"}).code == 0);
  CHECK(run({"convert", ncp, "--to", "stinespring"}).code == 1);

  const auto qutrit = scratch.write("q3.json", channel_to_json(zoo::identity(3)));
  CHECK(run({"convert", qutrit, "--to", "chi", "--basis", "pauli"}).code == 2);
  CHECK(run({"convert", qutrit, "--to", "affine-qubit"}).code == 2);
}

TEST_CASE("validate agrees before and after conversion for every zoo channel") {
  const cli_harness::Scratch scratch("cf_agree");
  const std::vector<std::vector<std::string>> zoo_args{
      {"zoo", "identity"},           {"zoo", "depolarizing", "--p", "0.6"},
      {"zoo", "phase-damping", "--p", "0.2"}, {"zoo", "amplitude-damping", "--p", "0.9"},
      {"zoo", "unitary", "--axis", "y", "--angle", "1.2"}, {"zoo", "spin-reversal"},
      {"zoo", "transpose"},          {"zoo", "pancake-ncp"},
      {"zoo", "pancake-cp"}};
  int k = 0;
  for (const auto& args : zoo_args) {
    const auto file = scratch.write("z" + std::to_string(k++) + ".json", run(args).out);
    const int verdict = run({"validate", file}).code;
    for (const char* to : {"kraus", "choi", "superop", "chi", "stinespring", "osd"}) {
      const auto conv = run({"convert", file, "--to", to});
      if (conv.code != 0) {
        // Only the Kraus and dilation forms are refused, and only for NCP maps.
        CHECK(verdict == 1);
        CHECK(conv.code == 1);
        continue;
      }
      const auto cfile = scratch.write("c.json", conv.out);
      CAPTURE(args[1]);
      CAPTURE(to);
      CHECK(run({"validate", cfile}).code == verdict);
    }
  }
}

TEST_CASE("apply") {
  const cli_harness::Scratch scratch("cf_apply");
  const ComplexMatrix rho{{0.7, cplx(0.1, 0.2)}, {cplx(0.1, -0.2), 0.3}};
  const auto state = scratch.write("rho.json", state_to_json(rho));
  const auto id = scratch.write("id.json", run({"zoo", "identity"}).out);
  const auto echo = run({"apply", id, state});
  CHECK(echo.code == 0);
  CHECK(state_from_json(echo.out) == rho);
  CHECK(echo.err.find("trace: 1") != std::string::npos);

  const auto full = scratch.write("ad.json", run({"zoo", "amplitude-damping", "--p", "1"}).out);
  const auto ground = run({"apply", full, state});
  CHECK(ground.code == 0);
  const ComplexMatrix out = state_from_json(ground.out);
  CHECK(std::abs(out(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(out(1, 1)) < 1e-15);
  CHECK(std::abs(out(0, 1)) < 1e-15);

  AffineQubit shifted;
  shifted.T = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  shifted.t = {0, 0, 0.5};
  const auto sh = scratch.write("shift.json", channel_to_json(shifted));
  const auto north = scratch.write("north.json", state_to_json(ComplexMatrix{{1, 0}, {0, 0}}));
  const auto warned = run({"apply", sh, north});
  CHECK(warned.code == 0);
  CHECK(warned.err.find("warning: output has negative eigenvalue -0.25") != std::string::npos);

  const auto q3 = scratch.write("q3.json", channel_to_json(zoo::identity(3)));
  CHECK(run({"apply", q3, state}).code == 2);
}

TEST_CASE("bloch-image") {
  const cli_harness::Scratch scratch("cf_bloch");
  const auto dep = scratch.write("dep.json", run({"zoo", "depolarizing", "--p", "0.5"}).out);
  const auto r = run({"bloch-image", dep, "--samples", "2048", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(std::abs(summary_field(r.err, "max_radius") - 0.5) < 0.01);
  CHECK(r.out.rfind("ax,ay,az,bx,by,bz\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2049);

  const auto rot = scratch.write("rot.json", run({"zoo", "unitary", "--angle", "0.9"}).out);
  const auto u = run({"bloch-image", rot});
  CHECK(std::abs(summary_field(u.err, "max_radius") - 1.0) < 1e-9);

  // The environment supplies the default seed.
  ::setenv("CHANNELFORGE_SEED", "7", 1);
  const auto env_seeded = run({"bloch-image", dep, "--samples", "16"});
  ::unsetenv("CHANNELFORGE_SEED");
  CHECK(env_seeded.out == run({"bloch-image", dep, "--samples", "16", "--seed", "7"}).out);
  CHECK(env_seeded.out != run({"bloch-image", dep, "--samples", "16", "--seed", "8"}).out);
  ::setenv("CHANNELFORGE_SEED", "x", 1);
  CHECK(run({"bloch-image", dep, "--samples", "16"}).code == 2);
  ::unsetenv("CHANNELFORGE_SEED");

  const auto q3 = scratch.write("q3.json", channel_to_json(zoo::identity(3)));
  CHECK(run({"bloch-image", q3}).code == 2);
}

TEST_CASE("lindblad") {
  const cli_harness::Scratch scratch("cf_lindblad");
  const auto zero = scratch.write("zero.json", generator_to_json(LindbladGenerator::zero(2)));
  const auto constant = run({"lindblad", zero, "--t", "1", "--steps", "4"});
  CHECK(constant.code == 0);
  CHECK(constant.out ==
        "t,re(rho00),im(rho00),re(rho01),im(rho01),re(rho10),im(rho10),re(rho11),im(rho11)\n"
        "0,1,0,0,0,0,0,0,0\n0.25,1,0,0,0,0,0,0,0\n0.5,1,0,0,0,0,0,0,0\n"
        "0.75,1,0,0,0,0,0,0,0\n1,1,0,0,0,0,0,0,0\n");

  const auto pd = scratch.write(
      "pd.json", generator_to_json(LindbladGenerator(ComplexMatrix(2, 2), {pauli(3)})));
  const auto emitted = run({"lindblad", pd, "--t", "0.5", "--emit-channel"});
  REQUIRE(emitted.code == 0);
  const auto ch = scratch.write("pd_channel.json", emitted.out);
  const auto verdict = run({"validate", ch});
  CHECK(verdict.code == 0);
  CHECK(same_channel(channel_from_json(emitted.out), zoo::phase_damping(1 - std::exp(-1.0)), 1e-10));

  const std::string stiff_doc = R"({"n": 2, "H": {"rows": 2, "cols": 2, "re": [0, 0, 0, 0]},
    "L": [{"rows": 2, "cols": 2, "re": [0, 1, 0, 0]}], "gamma-absorbed": false, "gamma": 1000,
    "rho0": {"rows": 2, "cols": 2, "re": [0, 0, 0, 1]}})";
  const auto stiff = scratch.write("stiff.json", stiff_doc);
  const auto drift = run({"lindblad", stiff, "--t", "1", "--steps", "10", "--scheme", "euler"});
  CHECK(drift.code == 3);
  CHECK(drift.err.find("trace drift") != std::string::npos);
  CHECK(run({"lindblad", stiff, "--t", "1", "--steps", "10000", "--scheme", "rk4"}).code == 0);

  const auto bad_state = scratch.write("bad_state.json", R"({"n": 2, "H": {"rows": 2, "cols": 2, "re": [0, 0, 0, 0]},
    "rho0": {"rows": 2, "cols": 2, "re": [2, 0, 0, -1]}})");
  CHECK(run({"lindblad", bad_state}).code == 2);
}

TEST_CASE("zoo") {
  const auto dep = run({"zoo", "depolarizing", "--p", "0.25"});
  CHECK(dep.code == 0);
  CHECK(std::get<KrausSet>(channel_from_json(dep.out)).size() == 4);
  const auto ncp = run({"zoo", "pancake-ncp"});
  CHECK(std::get<ChoiB>(channel_from_json(ncp.out)).matrix() == zoo::pancake_ncp().matrix());
  const auto id = run({"zoo", "identity"});
  const auto ops = std::get<KrausSet>(channel_from_json(id.out)).operators();
  REQUIRE(ops.size() == 1);
  CHECK(ops[0] == ComplexMatrix::identity(2));

  const cli_harness::Scratch scratch("cf_zoo");
  const auto target = scratch.write("placeholder", "") + ".out";
  const auto written = run({"zoo", "transpose", "--out", target});
  CHECK(written.code == 0);
  CHECK(written.out.empty());
  CHECK(cli_harness::slurp(target) == run({"zoo", "transpose"}).out);
  CHECK(run({"zoo", "transpose", "--out", "/nonexistent/dir/x.json"}).code == 2);
}
