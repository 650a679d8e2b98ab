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
#include <string>
#include <vector>

#include "ldgp/dataset.hpp"
#include "ldgp/feature.hpp"

namespace ldgp {

/// Sum of |x_i - y_i| in exact integer arithmetic.
/// Throws Error(kLengthMismatch) if the lengths differ.
std::uint64_t l1_distance(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y);
std::uint64_t l1_distance(const FeatureVector& x, const FeatureVector& y);

/// Enrolled features with their labels; every vector has the same config and length.
class Gallery {
 public:
  Gallery(std::vector<FeatureVector> features, std::vector<std::string> labels);

  std::size_t size() const noexcept { return features_.size(); }
  bool empty() const noexcept { return features_.empty(); }
  std::size_t feature_length() const noexcept {
    return features_.empty() ? 0 : features_.front().size();
  }
  const std::vector<FeatureVector>& features() const noexcept { return features_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<FeatureVector> features_;
  std::vector<std::string> labels_;
};

struct Match {
  std::string label;
  std::size_t index = 0;
  std::uint64_t distance = 0;
};

/// 1-NN under L1; ties resolve to the lowest gallery index.
Match nn_classify(const FeatureVector& probe, const Gallery& gallery);

struct Decision {
  std::size_t probe = 0;  // dataset index of the probe
  std::size_t match = 0;  // dataset index of the nearest gallery entry
  std::uint64_t distance = 0;
  bool correct = false;
};

struct EvalReport {
  std::size_t matches = 0;  // N_m
  std::size_t total = 0;    // N_t
  std::vector<Decision> decisions;

  /// 100 * N_m / N_t.
  double recognition_rate() const noexcept;
};

double recognition_rate(std::size_t matches, std::size_t total) noexcept;

/// Leave-one-out over precomputed features: each entry is classified against
/// all others. Requires at least two entries.
EvalReport evaluate_loo(std::span<const FeatureVector> features,
                        std::span<const std::string> labels, int threads = 1);

/// Extracts every feature once, then runs leave-one-out.
EvalReport evaluate_loo(const LabeledDataset& dataset, const FeatureConfig& config,
                        int threads = 1);

/// Probe/gallery partition of dataset indices, both sorted ascending.
struct ProbeSplit {
  std::vector<std::size_t> probes;
  std::vector<std::size_t> gallery;
};

/// Draws round(probe_fraction * N) probes, stratified per class by largest
/// remainder. A class never gives up its last image; if the target cannot be
/// met under that cap, throws Error(kInvalidArgument).
ProbeSplit stratified_split(std::span<const std::string> labels, double probe_fraction,
                            std::uint64_t seed);

/// Classifies split.probes against split.gallery.
EvalReport evaluate_split(std::span<const FeatureVector> features,
                          std::span<const std::string> labels, const ProbeSplit& split,
                          int threads = 1);

struct KFoldReport {
  std::vector<ProbeSplit> splits;
  std::vector<EvalReport> folds;

  /// Mean of the per-fold recognition rates.
  double average_rate() const noexcept;
};

/// Repeated random probe/gallery evaluation. Fold k uses a split drawn from a
/// seed derived from (seed, k); features are extracted once.
KFoldReport evaluate_split_kfold(const LabeledDataset& dataset, const FeatureConfig& config,
                                 double probe_fraction, int folds, std::uint64_t seed,
                                 int threads = 1);

}  // namespace ldgp
