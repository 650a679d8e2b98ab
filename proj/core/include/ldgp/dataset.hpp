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
#include <filesystem>
#include <string>
#include <vector>

#include "ldgp/image.hpp"

namespace ldgp {

struct DatasetEntry {
  GrayImage image;
  std::string label;
  std::string source;  // path relative to the dataset root or manifest
};

/// Ordered (image, label) collection. Entries are kept sorted by
/// (label, source) so every load of the same data yields the same order.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  /// Throws Error(kEmptyDataset) on an empty entry list.
  explicit LabeledDataset(std::vector<DatasetEntry> entries);

  const std::vector<DatasetEntry>& entries() const noexcept { return entries_; }
  const DatasetEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t image_count() const noexcept { return entries_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  /// Distinct labels in sorted order.
  std::vector<std::string> labels() const;

 private:
  std::vector<DatasetEntry> entries_;
  std::size_t class_count_ = 0;
};

/// Directory layout root/<class_id>/<image files>. Files with extensions
/// .pgm, .pnm or .png are picked up; anything else is ignored.
LabeledDataset load_dataset_dir(const std::filesystem::path& root, int threads = 1);

/// CSV manifest, one "relative_path,label" per line, '#' lines ignored.
/// Paths resolve against the manifest's directory.
LabeledDataset load_dataset_manifest(const std::filesystem::path& manifest, int threads = 1);

/// Dispatches on whether `path` is a directory or a manifest file.
LabeledDataset load_dataset(const std::filesystem::path& path, int threads = 1);

/// Deterministic stand-in for a face database. Each class gets one seeded base
/// image (smooth blobs plus texture); its members are small perturbations of
/// that base, so within-class feature distances are small compared to
/// between-class ones.
LabeledDataset synth_dataset(int classes, int per_class, int width, int height,
                             std::uint64_t seed);

}  // namespace ldgp
