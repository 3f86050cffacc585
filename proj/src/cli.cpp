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

#include "channelforge/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "channelforge/conversions.hpp"
#include "channelforge/errors.hpp"
#include "channelforge/linalg.hpp"
#include "channelforge/lindblad.hpp"
#include "channelforge/properties.hpp"
#include "channelforge/sampling.hpp"
#include "channelforge/serialize.hpp"
#include "channelforge/zoo.hpp"

namespace channelforge {

namespace {

constexpr double kTraceDriftLimit = 1e-3;

// Signals a numerical breakdown detected by the CLI itself.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("cannot read '" + path + "'");
  return buf.str();
}

std::uint64_t default_seed() {
  const char* env = std::getenv("CHANNELFORGE_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || *env == '-') {
    throw ParseError(std::string("CHANNELFORGE_SEED must be a nonnegative integer, got '") + env +
                     "'");
  }
  return v;
}

std::string summary_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

struct Options {
  std::string file;
  std::string second_file;
  double tol = kPsdTol;
  std::string to;
  std::string basis = "standard";
  std::size_t samples = kDefaultFigureSamples;
  std::optional<std::uint64_t> seed;
  std::string mode = "surface";
  double t = 1.0;
  std::optional<std::size_t> steps;
  std::string scheme = "rk4";
  bool emit_channel = false;
  std::optional<double> p;
  std::string out_path;
  std::string axis = "z";
  std::optional<double> angle;
  std::size_t probe = 0;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const Channel ch = channel_from_json(read_file(o.file));
  const ValidationReport r = validate(ch, o.tol);
  out << report_to_json(r);
  return r.completely_positive && r.trace_preserving ? kExitOk : kExitValidationFailed;
}

int cmd_props(const Options& o, std::ostream& out, std::ostream& err) {
  const Channel ch = channel_from_json(read_file(o.file));
  out << report_to_json(validate(ch, o.tol));
  if (o.probe > 0) {
    const DomainProbeResult probe =
        probe_positivity_domain(ch, o.probe, o.seed.value_or(default_seed()), o.tol);
    err << "positivity probe: " << probe.violations.size() << " of " << probe.samples_tested
        << " sampled states mapped outside the state space\n";
  }
  return kExitOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
  const Channel ch = channel_from_json(read_file(o.file));
  Channel result = ch;
  if (o.to == "kraus") {
    try {
      result = to_kraus(ch);
    } catch (const NotCompletelyPositiveError& e) {
      err << "error: the map is not completely positive (min Choi eigenvalue "
          << summary_number(e.min_eigenvalue())
          << "), so it has no Kraus form; use --to osd for the sum-difference form\n";
      return kExitValidationFailed;
    }
  } else if (o.to == "choi") {
    result = to_choi(ch);
  } else if (o.to == "superop") {
    result = to_superop(ch);
  } else if (o.to == "chi") {
    const std::size_t n = dimension(ch);
    if (o.basis == "pauli" && n != 2) throw DimensionError("the pauli basis needs a qubit channel");
    result = to_chi(ch, o.basis == "pauli" ? OperatorBasis::pauli() : OperatorBasis::standard(n));
  } else if (o.to == "stinespring") {
    result = to_stinespring(ch);
  } else if (o.to == "osd") {
    result = to_osd(ch);
  } else {
    result = affine_from_channel(ch, o.tol);
  }
  out << channel_to_json(result);
  return kExitOk;
}

int cmd_apply(const Options& o, std::ostream& out, std::ostream& err) {
  const Channel ch = channel_from_json(read_file(o.file));
  const ComplexMatrix rho = state_from_json(read_file(o.second_file));
  const ComplexMatrix image = apply(ch, rho);
  if (!all_finite(image)) throw NumericalFailure("output state has non-finite entries");
  out << state_to_json(image);
  err << "trace: " << format_number(trace(image).real()) << '\n';
  const double herm = hermiticity_deviation(image);
  if (herm > o.tol) {
    err << "warning: output is not Hermitian (deviation " << summary_number(herm) << ")\n";
  } else {
    const double smallest = hermitian_eig(hermitian_part(image)).eigenvalues.back();
    if (smallest < -o.tol) {
      err << "warning: output has negative eigenvalue " << summary_number(smallest)
          << "; it is not a density matrix\n";
    }
  }
  return kExitOk;
}

int cmd_bloch_image(const Options& o, std::ostream& out, std::ostream& err) {
  const Channel ch = channel_from_json(read_file(o.file));
  if (dimension(ch) != 2) throw DimensionError("bloch-image needs a qubit channel");
  const SampleMode mode = parse_sample_mode(o.mode);
  const BlochCloud cloud =
      bloch_image_sample(ch, o.samples, o.seed.value_or(default_seed()), mode);
  write_bloch_csv(out, cloud);
  const BlochVector& c = cloud.output_centroid;
  err << "max_radius=" << format_number(cloud.max_output_radius) << " centroid=("
      << format_number(c.a1) << "," << format_number(c.a2) << "," << format_number(c.a3)
      << ")\n";
  return kExitOk;
}

int cmd_lindblad(const Options& o, std::ostream& out, std::ostream& err) {
  const GeneratorDocument doc = generator_from_json(read_file(o.file));
  const Scheme scheme = parse_scheme(o.scheme);
  if (o.emit_channel) {
    const SuperopA a =
        channel_from_generator(doc.generator, o.t, o.steps.value_or(kDefaultChannelSteps), scheme);
    if (!all_finite(a.matrix())) throw NumericalFailure("integrated channel is not finite");
    const double drift = check_tp(a).deviation;
    if (drift > kTraceDriftLimit) {
      throw NumericalFailure("trace drift " + summary_number(drift) + " exceeds " +
                             summary_number(kTraceDriftLimit));
    }
    out << channel_to_json(a);
    return kExitOk;
  }
  EvolutionConfig cfg;
  cfg.total_time = o.t;
  cfg.steps = o.steps.value_or(kDefaultTrajectorySteps);
  cfg.scheme = scheme;
  const auto trajectory = evolve(doc.generator, doc.rho0, cfg);
  const double drift = max_trace_drift(trajectory);
  if (!(drift <= kTraceDriftLimit)) {
    throw NumericalFailure("trace drift " + summary_number(drift) + " exceeds " +
                           summary_number(kTraceDriftLimit));
  }
  write_trajectory_csv(out, trajectory);
  err << "max trace drift: " << summary_number(drift) << '\n';
  return kExitOk;
}

Channel zoo_channel(const std::string& name, const Options& o) {
  const bool needs_p =
      name == "depolarizing" || name == "phase-damping" || name == "amplitude-damping";
  if (needs_p && !o.p) throw ParseError("zoo " + name + " needs --p");
  if (!needs_p && o.p) throw ParseError("zoo " + name + " takes no --p");
  if (name != "unitary" && o.angle) throw ParseError("--angle applies to zoo unitary only");

  if (name == "identity") return zoo::identity();
  if (name == "depolarizing") return zoo::depolarizing(*o.p);
  if (name == "phase-damping") return zoo::phase_damping(*o.p);
  if (name == "amplitude-damping") return zoo::amplitude_damping(*o.p);
  if (name == "spin-reversal") return zoo::spin_reversal();
  if (name == "transpose") return zoo::transpose_map();
  if (name == "pancake-ncp") return zoo::pancake_ncp();
  if (name == "pancake-cp") return zoo::pancake_cp();
  if (name == "unitary") {
    if (!o.angle) throw ParseError("zoo unitary needs --angle (radians)");
    const int axis = o.axis == "x" ? 1 : o.axis == "y" ? 2 : 3;
    return zoo::unitary(zoo::rotation(axis, *o.angle));
  }
  throw ParseError("unknown zoo channel '" + name + "'");
}

int cmd_zoo(const Options& o, std::ostream& out) {
  const std::string text = channel_to_json(zoo_channel(o.file, o));
  if (o.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    throw ParseError("cannot write '" + o.out_path + "'");
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum channel representations, checks and dynamics", "channelforge"};
  app.set_version_flag("--version", "channelforge 0.1.0");
  app.require_subcommand(1);
  Options o;

  const auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "absolute tolerance for all checks")
        ->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "check CP and TP; exit 1 unless both hold");
  validate_cmd->add_option("file", o.file, "channel JSON")->required();
  add_tol(validate_cmd);

  auto* props_cmd = app.add_subcommand("props", "print the full property report");
  props_cmd->add_option("file", o.file, "channel JSON")->required();
  props_cmd->add_option("--probe", o.probe, "sample this many states for positivity");
  props_cmd->add_option("--seed", o.seed, "probe seed (default: $CHANNELFORGE_SEED or 0)");
  add_tol(props_cmd);

  auto* convert_cmd = app.add_subcommand("convert", "rewrite a channel in another representation");
  convert_cmd->add_option("file", o.file, "channel JSON")->required();
  convert_cmd->add_option("--to", o.to, "target representation")
      ->required()
      ->check(CLI::IsMember({"kraus", "choi", "superop", "chi", "stinespring", "osd",
                             "affine-qubit"}));
  convert_cmd->add_option("--basis", o.basis, "operator basis for --to chi")
      ->check(CLI::IsMember({"standard", "pauli"}));
  add_tol(convert_cmd);

  auto* apply_cmd = app.add_subcommand("apply", "apply a channel to a state");
  apply_cmd->add_option("channel", o.file, "channel JSON")->required();
  apply_cmd->add_option("state", o.second_file, "state JSON")->required();
  add_tol(apply_cmd);

  auto* bloch_cmd = app.add_subcommand("bloch-image", "sample the Bloch-ball image as CSV");
  bloch_cmd->add_option("file", o.file, "qubit channel JSON")->required();
  bloch_cmd->add_option("--samples", o.samples, "number of sampled inputs");
  bloch_cmd->add_option("--seed", o.seed, "sampling seed (default: $CHANNELFORGE_SEED or 0)");
  bloch_cmd->add_option("--mode", o.mode, "input distribution")
      ->check(CLI::IsMember({"surface", "ball"}));

  auto* lindblad_cmd = app.add_subcommand("lindblad", "integrate a Lindblad generator");
  lindblad_cmd->add_option("file", o.file, "generator JSON")->required();
  lindblad_cmd->add_option("--t", o.t, "total time")->check(CLI::PositiveNumber);
  lindblad_cmd->add_option("--steps", o.steps, "fixed steps (default 1000, 10000 with --emit-channel)")
      ->check(CLI::PositiveNumber);
  lindblad_cmd->add_option("--scheme", o.scheme, "integrator")
      ->check(CLI::IsMember({"euler", "rk4", "kraus-step"}));
  lindblad_cmd->add_flag("--emit-channel", o.emit_channel, "print the integrated channel");

  auto* zoo_cmd = app.add_subcommand("zoo", "print a standard channel");
  zoo_cmd->add_option("name", o.file, "channel name")
      ->required()
      ->check(CLI::IsMember({"identity", "depolarizing", "phase-damping", "amplitude-damping",
                             "unitary", "spin-reversal", "transpose", "pancake-ncp",
                             "pancake-cp"}));
  zoo_cmd->add_option("--p", o.p, "channel parameter in [0, 1]");
  zoo_cmd->add_option("--out", o.out_path, "write to this file instead of stdout");
  zoo_cmd->add_option("--axis", o.axis, "rotation axis for unitary")
      ->check(CLI::IsMember({"x", "y", "z"}));
  zoo_cmd->add_option("--angle", o.angle, "rotation angle in radians for unitary");

  std::vector<const char*> argv{"channelforge"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*props_cmd) return cmd_props(o, out, err);
    if (*convert_cmd) return cmd_convert(o, out, err);
    if (*apply_cmd) return cmd_apply(o, out, err);
    if (*bloch_cmd) return cmd_bloch_image(o, out, err);
    if (*lindblad_cmd) return cmd_lindblad(o, out, err);
    if (*zoo_cmd) return cmd_zoo(o, out);
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InvalidStateError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NotCompletelyPositiveError& e) {
    err << "validation failed: " << e.what() << '\n';
    return kExitValidationFailed;
  } catch (const NotTracePreservingError& e) {
    err << "validation failed: " << e.what() << '\n';
    return kExitValidationFailed;
  } catch (const NotHermitianError& e) {
    err << "validation failed: " << e.what() << '\n';
    return kExitValidationFailed;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::bad_alloc&) {
    err << "numerical failure: out of memory\n";
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
  return kExitInputError;
}

}  // namespace channelforge
