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

#include "ldgp/timing.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "ldgp/error.hpp"
#include "ldgp/recognition.hpp"

namespace ldgp {

double median(std::vector<double> samples) {
  require(!samples.empty(), "median of an empty sample");
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double median_seconds(int repetitions, Fn&& fn) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(repetitions));
  for (int r = 0; r < repetitions; ++r) {
    const auto start = Clock::now();
    fn();
    samples.push_back(std::chrono::duration<double>(Clock::now() - start).count());
  }
  return median(std::move(samples));
}

TimingRow base_row(const LabeledDataset& dataset, const FeatureConfig& config, int repetitions,
                   int threads) {
  TimingRow row;
  row.descriptor = config.descriptor;
  row.order = config.descriptor == Descriptor::kLbp ? 1 : config.order;
  row.width = dataset[0].image.width();
  row.height = dataset[0].image.height();
  row.gamma_count = dataset.image_count();
  row.feature_len = feature_length(config);
  row.repetitions = repetitions;
  row.threads = threads;
  return row;
}

}  // namespace

TimingRow time_extraction(const LabeledDataset& dataset, const FeatureConfig& config,
                          int repetitions, int threads) {
  require(repetitions >= 1, "repetitions must be >= 1");
  require(threads >= 1, "threads must be >= 1");
  for (const auto& e : dataset.entries()) validate(config, e.image.width(), e.image.height());

  TimingRow row = base_row(dataset, config, repetitions, threads);
  std::size_t produced = 0;
  row.extraction_seconds = median_seconds(repetitions, [&] {
    const auto features = extract_features(dataset, config, threads);
    produced += features.size();
  });
  require(produced == dataset.image_count() * static_cast<std::size_t>(repetitions),
          "extraction produced an unexpected number of features");
  return row;
}

TimingRow time_matching(const LabeledDataset& dataset, std::span<const FeatureVector> features,
                        int repetitions) {
  require(repetitions >= 1, "repetitions must be >= 1");
  require(features.size() == dataset.image_count(), "one feature per dataset image required");
  require(features.size() >= 2, "matching needs at least two images");

  std::vector<std::string> labels;
  labels.reserve(dataset.image_count());
  for (const auto& e : dataset.entries()) labels.push_back(e.label);

  TimingRow row = base_row(dataset, features.front().config, repetitions, 1);
  std::size_t checksum = 0;
  row.match_seconds = median_seconds(repetitions, [&] {
    const auto report = evaluate_loo(features, labels, 1);
    checksum += report.matches;
  });
  require(checksum <= features.size() * static_cast<std::size_t>(repetitions),
          "matching produced an impossible match count");
  row.distance_count = features.size() * (features.size() - 1);
  return row;
}

TimingRow time_descriptor(const LabeledDataset& dataset, const FeatureConfig& config,
                          int repetitions, int threads) {
  TimingRow row = time_extraction(dataset, config, repetitions, threads);
  const auto features = extract_features(dataset, config, threads);
  const TimingRow match = time_matching(dataset, features, repetitions);
  row.match_seconds = match.match_seconds;
  row.distance_count = match.distance_count;
  return row;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "line fit needs >= 2 paired samples");
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  require(sxx > 0.0, "line fit needs distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

}  // namespace ldgp
