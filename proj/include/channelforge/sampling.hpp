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
#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "channelforge/channel.hpp"
#include "channelforge/qubit.hpp"

namespace channelforge {

enum class SampleMode { surface, ball };

/// Parses "surface" or "ball"; throws std::invalid_argument otherwise.
SampleMode parse_sample_mode(std::string_view text);

inline constexpr std::size_t kDefaultFigureSamples = 2048;

struct BlochPair {
  BlochVector input;
  BlochVector output;
};

struct BlochCloud {
  std::vector<BlochPair> pairs;  // in sample order
  double max_output_radius = 0.0;
  BlochVector output_centroid;
};

/// Maps sampled input Bloch vectors through the affine form of a qubit channel.
/// Sample i is drawn from Rng(derive_seed(seed, i)), so the cloud is identical
/// for any thread count. Throws DimensionError for n != 2 and the errors of
/// affine_from_channel for maps without an affine form.
BlochCloud bloch_image_sample(const Channel& ch, std::size_t n_samples, std::uint64_t seed,
                              SampleMode mode = SampleMode::surface);
/// Single-threaded reference of bloch_image_sample; same output.
BlochCloud bloch_image_sample_serial(const Channel& ch, std::size_t n_samples,
                                     std::uint64_t seed, SampleMode mode = SampleMode::surface);

/// Header ax,ay,az,bx,by,bz then one row per pair, 17 significant digits.
void write_bloch_csv(std::ostream& out, const BlochCloud& cloud);

}  // namespace channelforge
