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

#include <cstddef>

#include "channelforge/channel.hpp"
#include "channelforge/matrix.hpp"

namespace channelforge::zoo {

// Standard qubit maps. The completely positive ones come as Kraus sets, the
// not-completely-positive examples as Choi matrices.

KrausSet identity(std::size_t n = 2);

/// D1 = sqrt(1 - 3p/4) 1, D2..D4 = sqrt(p/4) sigma_{1,2,3}. Bloch vector a -> (1 - p) a.
KrausSet depolarizing(double p);
/// D1 = sqrt(1 - p/2) 1, D2 = sqrt(p/2) sigma_3. Contracts a1, a2 by (1 - p).
KrausSet phase_damping(double p);
/// D1 = diag(1, sqrt(1 - p)), D2 = sqrt(p) |0><1|. Pushes the ball toward |0>.
KrausSet amplitude_damping(double p);
/// Single-operator channel rho -> U rho U^dagger. Throws NotUnitaryError.
KrausSet unitary(const ComplexMatrix& u, double tol = 1e-9);
/// exp(-i angle sigma_axis / 2), axis in {1, 2, 3}.
ComplexMatrix rotation(int axis, double angle);

/// Disc of radius 1/2 in the equatorial plane: z = (1/2, 1/2, 0).
KrausSet pancake_cp();

/// a -> -a. Choi eigenvalues {1, 1, 1, -1}.
ChoiB spin_reversal();
/// rho -> rho^T (the SWAP Choi matrix).
ChoiB transpose_map();
/// Projection onto the unit equatorial disc: z = (1, 1, 0).
ChoiB pancake_ncp();

}  // namespace channelforge::zoo
