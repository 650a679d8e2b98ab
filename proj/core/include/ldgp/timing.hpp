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
#include <optional>
#include <span>
#include <vector>

#include "ldgp/dataset.hpp"
#include "ldgp/feature.hpp"

namespace ldgp {

/// One benchmark measurement. Times are medians over `repetitions` runs;
/// a missing time means that stage was not measured.
struct TimingRow {
  Descriptor descriptor = Descriptor::kLdgp;
  int order = 2;
  int width = 0;
  int height = 0;
  std::size_t gamma_count = 0;
  std::size_t feature_len = 0;
  std::optional<double> extraction_seconds;
  std::optional<double> match_seconds;
  int repetitions = 0;
  int threads = 1;
  std::size_t distance_count = 0;  // distances per matching pass; not serialized
};

double median(std::vector<double> samples);

/// Wall-clock time to extract features for every (preloaded) dataset image.
TimingRow time_extraction(const LabeledDataset& dataset, const FeatureConfig& config,
                          int repetitions, int threads = 1);

/// Wall-clock time of one full single-threaded leave-one-out matching pass,
/// gamma * (gamma - 1) distances.
TimingRow time_matching(const LabeledDataset& dataset, std::span<const FeatureVector> features,
                        int repetitions);

/// Extraction and matching rows merged into one.
TimingRow time_descriptor(const LabeledDataset& dataset, const FeatureConfig& config,
                          int repetitions, int threads = 1);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace ldgp
