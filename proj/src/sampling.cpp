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

#include "channelforge/sampling.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "channelforge/errors.hpp"
#include "channelforge/random.hpp"

namespace channelforge {

namespace {

BlochPair sample_one(const AffineQubit& aff, std::uint64_t seed, std::size_t index,
                     SampleMode mode) {
  Rng rng(derive_seed(seed, index));
  const BlochVector in = mode == SampleMode::surface ? uniform_on_sphere(rng) : uniform_in_ball(rng);
  return {in, apply_affine(aff, in)};
}

AffineQubit affine_of_qubit_channel(const Channel& ch) {
  if (dimension(ch) != 2) {
    throw DimensionError("Bloch imaging needs a qubit channel, got dimension " +
                         std::to_string(dimension(ch)));
  }
  return affine_from_channel(ch);
}

void summarize(BlochCloud& cloud) {
  double sx = 0.0, sy = 0.0, sz = 0.0;
  for (const auto& p : cloud.pairs) {
    cloud.max_output_radius = std::max(cloud.max_output_radius, p.output.norm());
    sx += p.output.a1;
    sy += p.output.a2;
    sz += p.output.a3;
  }
  if (!cloud.pairs.empty()) {
    const double count = double(cloud.pairs.size());
    cloud.output_centroid = {sx / count, sy / count, sz / count};
  }
}

}  // namespace

SampleMode parse_sample_mode(std::string_view text) {
  if (text == "surface") return SampleMode::surface;
  if (text == "ball") return SampleMode::ball;
  throw std::invalid_argument("sample mode must be 'surface' or 'ball', got '" +
                              std::string(text) + "'");
}

BlochCloud bloch_image_sample(const Channel& ch, std::size_t n_samples, std::uint64_t seed,
                              SampleMode mode) {
  const AffineQubit aff = affine_of_qubit_channel(ch);
  BlochCloud cloud;
  cloud.pairs.resize(n_samples);
  const auto count = static_cast<std::int64_t>(n_samples);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    cloud.pairs[idx] = sample_one(aff, seed, idx, mode);
  }
  summarize(cloud);
  return cloud;
}

BlochCloud bloch_image_sample_serial(const Channel& ch, std::size_t n_samples,
                                     std::uint64_t seed, SampleMode mode) {
  const AffineQubit aff = affine_of_qubit_channel(ch);
  BlochCloud cloud;
  cloud.pairs.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) cloud.pairs.push_back(sample_one(aff, seed, i, mode));
  summarize(cloud);
  return cloud;
}

void write_bloch_csv(std::ostream& out, const BlochCloud& cloud) {
  out << "ax,ay,az,bx,by,bz\n";
  char line[256];
  for (const auto& p : cloud.pairs) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", p.input.a1,
                  p.input.a2, p.input.a3, p.output.a1, p.output.a2, p.output.a3);
    out << line;
  }
}

}  // namespace channelforge
