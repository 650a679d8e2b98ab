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

#include "ldgp/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "ldgp/error.hpp"
#include "parallel.hpp"

namespace fs = std::filesystem;

namespace ldgp {

LabeledDataset::LabeledDataset(std::vector<DatasetEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(ErrorKind::kEmptyDataset, "");
  std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    return a.label != b.label ? a.label < b.label : a.source < b.source;
  });
  class_count_ = labels().size();
}

std::vector<std::string> LabeledDataset::labels() const {
  std::set<std::string> distinct;
  for (const auto& e : entries_) distinct.insert(e.label);
  return {distinct.begin(), distinct.end()};
}

namespace {

struct PendingEntry {
  fs::path file;
  std::string label;
  std::string source;
};

bool is_image_extension(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm" || ext == ".pnm" || ext == ".png";
}

LabeledDataset materialize(std::vector<PendingEntry> pending, int threads) {
  if (pending.empty()) fail(ErrorKind::kEmptyDataset, "");
  std::vector<DatasetEntry> entries(pending.size());
  detail::parallel_for(pending.size(), threads, [&](std::size_t i) {
    entries[i] = DatasetEntry{load_image(pending[i].file), pending[i].label, pending[i].source};
  });
  return LabeledDataset(std::move(entries));
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

}  // namespace

LabeledDataset load_dataset_dir(const fs::path& root, int threads) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) fail(ErrorKind::kUnreadableFile, root.string());

  std::vector<PendingEntry> pending;
  for (const auto& class_dir : fs::directory_iterator(root)) {
    if (!class_dir.is_directory()) continue;
    const std::string label = class_dir.path().filename().string();
    for (const auto& file : fs::directory_iterator(class_dir.path())) {
      if (!file.is_regular_file() || !is_image_extension(file.path())) continue;
      pending.push_back({file.path(), label,
                         fs::relative(file.path(), root).generic_string()});
    }
  }
  return materialize(std::move(pending), threads);
}

LabeledDataset load_dataset_manifest(const fs::path& manifest, int threads) {
  std::ifstream in(manifest);
  if (!in) fail(ErrorKind::kUnreadableFile, manifest.string());
  const fs::path base = manifest.parent_path();

  std::vector<PendingEntry> pending;
  std::unordered_set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.rfind(',');
    if (comma == std::string::npos) {
      fail(ErrorKind::kUnsupportedFormat,
           manifest.string() + ":" + std::to_string(line_no) + " expected relative_path,label");
    }
    std::string rel = trim(line.substr(0, comma));
    std::string label = trim(line.substr(comma + 1));
    if (rel.empty() || label.empty()) {
      fail(ErrorKind::kUnsupportedFormat,
           manifest.string() + ":" + std::to_string(line_no) + " empty path or label");
    }
    if (!seen.insert(rel).second) fail(ErrorKind::kDuplicatePath, rel);
    pending.push_back({base / rel, std::move(label), std::move(rel)});
  }
  return materialize(std::move(pending), threads);
}

LabeledDataset load_dataset(const fs::path& path, int threads) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) return load_dataset_dir(path, threads);
  return load_dataset_manifest(path, threads);
}

namespace {

std::string padded(int value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, width - s.size(), '0');
  return s;
}

std::uint8_t clamp_pixel(int v) { return static_cast<std::uint8_t>(std::clamp(v, 0, 255)); }

std::vector<int> base_pattern(int width, int height, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> texture(-24, 24);

  const int blobs = 3 + static_cast<int>(unit(rng) * 4);
  struct Blob {
    double cx, cy, radius, amplitude;
  };
  std::vector<Blob> shapes;
  for (int i = 0; i < blobs; ++i) {
    shapes.push_back({unit(rng) * width, unit(rng) * height,
                      (0.15 + 0.35 * unit(rng)) * std::max(width, height),
                      (unit(rng) - 0.5) * 220.0});
  }
  const double gx = (unit(rng) - 0.5) * 80.0 / width;
  const double gy = (unit(rng) - 0.5) * 80.0 / height;

  std::vector<int> base(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double v = 128.0 + gx * x + gy * y;
      for (const auto& b : shapes) {
        const double dx = x - b.cx, dy = y - b.cy;
        v += b.amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * b.radius * b.radius));
      }
      base[static_cast<std::size_t>(y) * width + x] =
          static_cast<int>(std::lround(v)) + texture(rng);
    }
  }
  return base;
}

}  // namespace

LabeledDataset synth_dataset(int classes, int per_class, int width, int height,
                             std::uint64_t seed) {
  require(classes >= 1 && per_class >= 1, "synthetic dataset counts must be >= 1");
  require(width >= 1 && height >= 1, "synthetic image size must be >= 1");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> jitter(-3, 3);
  std::uniform_int_distribution<int> brightness(-10, 10);
  std::uniform_int_distribution<int> coin(0, 3);

  const int label_width = static_cast<int>(std::to_string(classes - 1).size());
  const int member_width = static_cast<int>(std::to_string(per_class - 1).size());

  std::vector<DatasetEntry> entries;
  entries.reserve(static_cast<std::size_t>(classes) * per_class);
  for (int c = 0; c < classes; ++c) {
    const auto base = base_pattern(width, height, rng);
    const std::string label = "c" + padded(c, label_width);
    for (int k = 0; k < per_class; ++k) {
      const int offset = k == 0 ? 0 : brightness(rng);
      std::vector<std::uint8_t> pixels(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) {
        // Member 0 is the base itself; others perturb roughly a quarter of
        // the pixels by a few gray levels.
        const int noise = (k != 0 && coin(rng) == 0) ? jitter(rng) : 0;
        pixels[i] = clamp_pixel(base[i] + offset + noise);
      }
      entries.push_back({GrayImage(width, height, std::move(pixels)), label,
                         "synthetic/" + label + "/" + padded(k, member_width) + ".pgm"});
    }
  }
  return LabeledDataset(std::move(entries));
}

}  // namespace ldgp
