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

#include "ldgp/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ldgp/error.hpp"
#include "ldgp/recognition.hpp"
#include "parallel.hpp"

namespace ldgp {

GrayImage add_gaussian_noise(const GrayImage& image, double variance, std::uint64_t seed) {
  require(std::isfinite(variance) && variance >= 0.0, "noise variance must be >= 0");
  if (variance == 0.0) return image;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(variance));
  const auto src = image.pixels();
  std::vector<std::uint8_t> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double v = std::round(static_cast<double>(src[i]) + normal(rng));
    out[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
  }
  return GrayImage(image.width(), image.height(), std::move(out));
}

double NoisePoint::recognition_rate() const noexcept {
  return ldgp::recognition_rate(matches, total);
}

namespace {

std::uint64_t noise_seed(std::uint64_t seed, std::size_t variance_index, std::size_t image_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(variance_index),
                    static_cast<std::uint32_t>(image_index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace

std::vector<NoisePoint> noise_sweep(const LabeledDataset& dataset, const FeatureConfig& config,
                                    std::span<const double> variances, std::uint64_t seed,
                                    int threads) {
  require(!variances.empty(), "noise sweep needs at least one variance");
  for (double v : variances) require(std::isfinite(v) && v >= 0.0, "noise variance must be >= 0");

  const auto clean = extract_features(dataset, config, threads);
  std::vector<std::string> labels;
  for (const auto& e : dataset.entries()) labels.push_back(e.label);
  const Gallery gallery(clean, labels);

  std::vector<NoisePoint> points;
  points.reserve(variances.size());
  for (std::size_t v = 0; v < variances.size(); ++v) {
    std::vector<char> correct(dataset.image_count(), 0);
    detail::parallel_for(dataset.image_count(), threads, [&](std::size_t i) {
      const auto noisy = add_gaussian_noise(dataset[i].image, variances[v], noise_seed(seed, v, i));
      const auto match = nn_classify(extract_feature(noisy, config), gallery);
      correct[i] = match.label == labels[i];
    });
    const auto hits = static_cast<std::size_t>(std::count(correct.begin(), correct.end(), 1));
    points.push_back({variances[v], hits, dataset.image_count()});
  }
  return points;
}

}  // namespace ldgp
