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
#include <span>

#include "channelforge/channel.hpp"
#include "channelforge/matrix.hpp"

namespace channelforge {

/// Eigenvalues with |lambda| <= this are treated as zero when building
/// canonical Kraus / OSD operators.
inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr double kDefaultTpTol = 1e-9;

/// A = sum D (x) conj(D).
SuperopA a_from_kraus(const KrausSet& k);
ChoiB b_from_a(const SuperopA& a);
SuperopA a_from_b(const ChoiB& b);
/// B = sum |D>><<D|.
ChoiB b_from_kraus(const KrausSet& k);

/// Canonical Kraus set D = sqrt(lambda) mat|Lambda>, one per eigenvalue > tol.
/// Throws NotCompletelyPositiveError carrying the smallest eigenvalue if any
/// eigenvalue is below -tol; use osd_from_b for such maps.
KrausSet kraus_from_b(const ChoiB& b, double tol = kDefaultEigenTol);

/// Positive eigenvalues feed the D family, negative ones the F family with
/// sqrt(|lambda|) weights.
OSD osd_from_b(const ChoiB& b, double tol = kDefaultEigenTol);
ChoiB b_from_osd(const OSD& osd);

/// chi_ij = sum_a c_i^a conj(c_j^a), c_i^a = tr(A_i^dagger D_a).
ChiMatrix chi_from_kraus(const KrausSet& k, const OperatorBasis& basis);
/// chi_ij = <<A_i| B |A_j>>; defined for NCP maps too.
ChiMatrix chi_from_b(const ChoiB& b, const OperatorBasis& basis);
ChoiB b_from_chi(const ChiMatrix& chi);
/// Diagonalizes chi: D_b = sqrt(lambda_b) sum_i v_i^b A_i. Throws on indefinite chi.
KrausSet kraus_from_chi(const ChiMatrix& chi, double tol = kDefaultEigenTol);

/// Dilation with env_dim = number of Kraus operators. The columns fed by the
/// environment ground state are U(e_j (x) e_0) = sum_a D_a e_j (x) e_a; the rest
/// are filled by orthonormal_complement. Throws NotTracePreservingError when
/// sum D^dagger D deviates from 1 by more than tp_tol.
StinespringModel stinespring_from_kraus(const KrausSet& k, double tp_tol = kDefaultTpTol);
/// Reduced matrix elements <k|U|env_state_index>.
KrausSet kraus_from_stinespring(const StinespringModel& s);

/// D_{k,k'} = sqrt(p_k') <k|U|k'> for a unitary on (system (x) environment) and a
/// diagonal environment state. Zero-probability columns are skipped.
KrausSet kraus_from_environment(const ComplexMatrix& u, std::span<const double> env_probs,
                                std::size_t n, double tol = kDefaultTpTol);

/// K_b = sum_a W(b, a) D_a for an isometry W (M x K, W^dagger W = 1).
KrausSet remix_kraus(const KrausSet& k, const ComplexMatrix& w);

ChoiB to_choi(const Channel& ch);
SuperopA to_superop(const Channel& ch);
KrausSet to_kraus(const Channel& ch, double tol = kDefaultEigenTol);
OSD to_osd(const Channel& ch, double tol = kDefaultEigenTol);
ChiMatrix to_chi(const Channel& ch, const OperatorBasis& basis);
StinespringModel to_stinespring(const Channel& ch, double tol = kDefaultEigenTol);

/// Representation-native evaluation of the map on an n x n matrix.
ComplexMatrix apply(const Channel& ch, const ComplexMatrix& rho);

/// (E (x) id)(P) for P on (system (x) auxiliary).
ComplexMatrix apply_extended(const Channel& ch, const ComplexMatrix& p, std::size_t aux_dim);

/// Runs `first`, then `second`. Returned as superoperator A_second * A_first.
SuperopA compose(const Channel& first, const Channel& second);

}  // namespace channelforge
