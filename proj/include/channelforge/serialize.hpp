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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "channelforge/channel.hpp"
#include "channelforge/lindblad.hpp"
#include "channelforge/matrix.hpp"
#include "channelforge/properties.hpp"

namespace channelforge {

// Documents are JSON objects. Matrices are {"rows", "cols", "re", "im"} with
// row-major entry arrays. Doubles are written with 17 significant digits, so
// write-then-read is bit exact. Readers reject unknown keys, wrong types,
// inconsistent shapes and non-finite numbers with ParseError.

/// Shortest "%.17g" rendering; non-finite values render as null.
std::string format_number(double x);

/// One-line matrix object.
std::string matrix_to_json(const ComplexMatrix& m);

/// {"kind", "n", ...}. Kind-specific keys:
///   kraus: operators; choi, superop: matrix; chi: basis (+ basis_elements when
///   not "standard"/"pauli"), matrix; stinespring: env_dim, env_state_index,
///   unitary; osd: positive, negative; affine-qubit: T (3x3 rows), t.
std::string channel_to_json(const Channel& ch);
Channel channel_from_json(std::string_view text);

/// {"n", "rho"}.
std::string state_to_json(const ComplexMatrix& rho);
ComplexMatrix state_from_json(std::string_view text);

/// Parsed generator document {"n", "H", "L", "gamma-absorbed", ["gamma"], ["rho0"]}.
/// With "gamma-absorbed": false each L_a is scaled by sqrt(gamma_a); "gamma" is
/// a number (shared) or one number per operator. "rho0" defaults to |0><0|.
struct GeneratorDocument {
  LindbladGenerator generator;
  ComplexMatrix rho0;
};
GeneratorDocument generator_from_json(std::string_view text);
std::string generator_to_json(const LindbladGenerator& g);

/// Field names match ValidationReport.
std::string report_to_json(const ValidationReport& r);

/// Header t,re(rho00),im(rho00),re(rho01),... in row-major order.
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& trajectory);

}  // namespace channelforge
