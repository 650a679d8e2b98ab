// Copyright 2026 The LDGP Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ldgp/dataset.hpp"
#include "ldgp/feature.hpp"
#include "ldgp/image.hpp"

namespace ldgp {

/// Adds zero-mean Gaussian noise of the given variance (intensity units
/// squared) to each pixel, rounds to nearest and clamps to [0, 255].
/// Deterministic for a given seed. Throws on negative variance.
GrayImage add_gaussian_noise(const GrayImage& image, double variance, std::uint64_t seed);

struct NoisePoint {
  double variance = 0.0;
  std::size_t matches = 0;
  std::size_t total = 0;

  double recognition_rate() const noexcept;
};

/// Gallery = clean features of every image; probes = features of noisy copies.
/// One row per requested variance, in request order.
std::vector<NoisePoint> noise_sweep(const LabeledDataset& dataset, const FeatureConfig& config,
                                    std::span<const double> variances, std::uint64_t seed,
                                    int threads = 1);

}  // namespace ldgp
