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

#include "ldgp/recognition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "ldgp/error.hpp"
#include "parallel.hpp"

namespace ldgp {

std::uint64_t l1_distance(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y) {
  if (x.size() != y.size()) {
    fail(ErrorKind::kLengthMismatch,
         std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
  }
  return sum;
}

std::uint64_t l1_distance(const FeatureVector& x, const FeatureVector& y) {
  return l1_distance(std::span<const std::uint32_t>(x.values),
                     std::span<const std::uint32_t>(y.values));
}

Gallery::Gallery(std::vector<FeatureVector> features, std::vector<std::string> labels)
    : features_(std::move(features)), labels_(std::move(labels)) {
  require(features_.size() == labels_.size(), "gallery features and labels differ in count");
  for (const auto& f : features_) {
    if (f.size() != features_.front().size()) {
      fail(ErrorKind::kLengthMismatch, "gallery vectors differ in length");
    }
    require(f.config == features_.front().config, "gallery vectors differ in feature config");
  }
}

namespace {

struct Nearest {
  std::size_t index = 0;
  std::uint64_t distance = std::numeric_limits<std::uint64_t>::max();
};

// Scans candidates in the given order; strict < keeps the first minimum.
template <typename IndexRange>
Nearest scan(std::span<const FeatureVector> features, const FeatureVector& probe,
             const IndexRange& candidates, std::size_t skip) {
  Nearest best;
  bool found = false;
  for (std::size_t idx : candidates) {
    if (idx == skip) continue;
    const auto d = l1_distance(probe, features[idx]);
    if (!found || d < best.distance) {
      best = {idx, d};
      found = true;
    }
  }
  return best;
}

constexpr std::size_t kNoSkip = std::numeric_limits<std::size_t>::max();

}  // namespace

Match nn_classify(const FeatureVector& probe, const Gallery& gallery) {
  if (gallery.empty()) fail(ErrorKind::kEmptyGallery, "");
  if (probe.size() != gallery.feature_length()) {
    fail(ErrorKind::kLengthMismatch, "probe length " + std::to_string(probe.size()) +
                                         " vs gallery length " +
                                         std::to_string(gallery.feature_length()));
  }
  std::vector<std::size_t> all(gallery.size());
  std::iota(all.begin(), all.end(), 0);
  const auto best = scan(gallery.features(), probe, all, kNoSkip);
  return {gallery.labels()[best.index], best.index, best.distance};
}

double recognition_rate(std::size_t matches, std::size_t total) noexcept {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(matches) / static_cast<double>(total);
}

double EvalReport::recognition_rate() const noexcept {
  return ldgp::recognition_rate(matches, total);
}

namespace {

EvalReport classify_probes(std::span<const FeatureVector> features,
                           std::span<const std::string> labels,
                           std::span<const std::size_t> probes,
                           std::span<const std::size_t> gallery, bool leave_one_out,
                           int threads) {
  EvalReport report;
  report.decisions.resize(probes.size());
  detail::parallel_for(probes.size(), threads, [&](std::size_t i) {
    const std::size_t p = probes[i];
    const auto best = scan(features, features[p], gallery, leave_one_out ? p : kNoSkip);
    report.decisions[i] = {p, best.index, best.distance, labels[best.index] == labels[p]};
  });
  report.total = probes.size();
  report.matches = static_cast<std::size_t>(
      std::count_if(report.decisions.begin(), report.decisions.end(),
                    [](const Decision& d) { return d.correct; }));
  return report;
}

void require_parallel(std::span<const FeatureVector> features,
                      std::span<const std::string> labels) {
  require(features.size() == labels.size(), "features and labels differ in count");
  for (const auto& f : features) {
    if (f.size() != features.front().size()) {
      fail(ErrorKind::kLengthMismatch, "feature vectors differ in length");
    }
  }
}

}  // namespace

EvalReport evaluate_loo(std::span<const FeatureVector> features,
                        std::span<const std::string> labels, int threads) {
  require_parallel(features, labels);
  require(features.size() >= 2, "leave-one-out needs at least two images");
  std::vector<std::size_t> all(features.size());
  std::iota(all.begin(), all.end(), 0);
  return classify_probes(features, labels, all, all, true, threads);
}

EvalReport evaluate_loo(const LabeledDataset& dataset, const FeatureConfig& config,
                        int threads) {
  require(dataset.image_count() >= 2, "leave-one-out needs at least two images");
  const auto features = extract_features(dataset, config, threads);
  std::vector<std::string> labels;
  labels.reserve(dataset.image_count());
  for (const auto& e : dataset.entries()) labels.push_back(e.label);
  return evaluate_loo(features, labels, threads);
}

ProbeSplit stratified_split(std::span<const std::string> labels, double probe_fraction,
                            std::uint64_t seed) {
  require(probe_fraction > 0.0 && probe_fraction < 1.0, "probe fraction must be in (0, 1)");
  require(!labels.empty(), "cannot split an empty label list");

  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

  const auto target =
      static_cast<std::size_t>(std::llround(probe_fraction * static_cast<double>(labels.size())));
  require(target >= 1, "probe fraction selects no probes");

  struct Quota {
    std::vector<std::size_t>* members;
    std::size_t take;
    double remainder;
  };
  std::vector<Quota> quotas;
  std::size_t assigned = 0;
  for (auto& [label, members] : by_class) {
    const double exact = probe_fraction * static_cast<double>(members.size());
    const auto whole = static_cast<std::size_t>(std::floor(exact));
    const std::size_t take = std::min(whole, members.size() - 1);
    quotas.push_back({&members, take, exact - static_cast<double>(whole)});
    assigned += take;
  }

  // Largest remainder first; std::stable_sort keeps label order on ties.
  std::vector<std::size_t> order(quotas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return quotas[a].remainder > quotas[b].remainder;
  });
  bool progressed = true;
  while (assigned < target && progressed) {
    progressed = false;
    for (std::size_t q : order) {
      if (assigned == target) break;
      if (quotas[q].take + 1 < quotas[q].members->size()) {
        ++quotas[q].take;
        ++assigned;
        progressed = true;
      }
    }
  }
  if (assigned < target) {
    fail(ErrorKind::kInvalidArgument,
         "probe fraction leaves an empty gallery class");
  }

  std::mt19937_64 rng(seed);
  ProbeSplit split;
  for (auto& quota : quotas) {
    std::vector<std::size_t> members = *quota.members;
    std::shuffle(members.begin(), members.end(), rng);
    split.probes.insert(split.probes.end(), members.begin(), members.begin() + quota.take);
    split.gallery.insert(split.gallery.end(), members.begin() + quota.take, members.end());
  }
  std::sort(split.probes.begin(), split.probes.end());
  std::sort(split.gallery.begin(), split.gallery.end());
  return split;
}

EvalReport evaluate_split(std::span<const FeatureVector> features,
                          std::span<const std::string> labels, const ProbeSplit& split,
                          int threads) {
  require_parallel(features, labels);
  if (split.gallery.empty()) fail(ErrorKind::kEmptyGallery, "");
  for (auto idx : split.probes) require(idx < features.size(), "probe index out of range");
  for (auto idx : split.gallery) require(idx < features.size(), "gallery index out of range");
  return classify_probes(features, labels, split.probes, split.gallery, false, threads);
}

double KFoldReport::average_rate() const noexcept {
  if (folds.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& f : folds) sum += f.recognition_rate();
  return sum / static_cast<double>(folds.size());
}

KFoldReport evaluate_split_kfold(const LabeledDataset& dataset, const FeatureConfig& config,
                                 double probe_fraction, int folds, std::uint64_t seed,
                                 int threads) {
  require(folds >= 1, "fold count must be >= 1");
  std::vector<std::string> labels;
  labels.reserve(dataset.image_count());
  for (const auto& e : dataset.entries()) labels.push_back(e.label);

  // Validate the split before paying for extraction.
  std::mt19937_64 seeder(seed);
  std::vector<std::uint64_t> fold_seeds(static_cast<std::size_t>(folds));
  for (auto& s : fold_seeds) s = seeder();
  KFoldReport report;
  for (auto s : fold_seeds) report.splits.push_back(stratified_split(labels, probe_fraction, s));

  const auto features = extract_features(dataset, config, threads);
  for (const auto& split : report.splits) {
    report.folds.push_back(evaluate_split(features, labels, split, threads));
  }
  return report;
}

}  // namespace ldgp
