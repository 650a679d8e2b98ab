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
#include <string>
#include <string_view>
#include <vector>

#include "ldgp/code_image.hpp"
#include "ldgp/dataset.hpp"
#include "ldgp/image.hpp"

namespace ldgp {

enum class Descriptor { kLdgp, kLdp, kLbp };

std::string_view to_string(Descriptor d) noexcept;
/// Accepts "ldgp", "ldp", "lbp" (case-insensitive).
std::optional<Descriptor> parse_descriptor(std::string_view text);

/// Bits per code for the descriptor's code images.
int code_bits(Descriptor d) noexcept;
/// Code images produced per input image: 4 for LDP, 1 otherwise.
int images_per_descriptor(Descriptor d) noexcept;

struct FeatureConfig {
  Descriptor descriptor = Descriptor::kLdgp;
  int order = 2;  // ignored for LBP
  int grid_rows = 4;
  int grid_cols = 4;
  int bins = 8;

  int regions() const noexcept { return grid_rows * grid_cols; }

  friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

/// regions x bins x images-per-descriptor.
std::size_t feature_length(const FeatureConfig& config) noexcept;

/// Throws Error(kInvalidArgument) if the config cannot be applied to a
/// width x height image: bins must be a power of two <= 2^code_bits, the
/// grid must fit the image, and the order must be in range.
void validate(const FeatureConfig& config, int width, int height);

/// Grid counts for a tile-size reading of the region parameter: as many whole
/// tiles as fit (at least one per axis); leftover pixels are spread by the
/// floor-boundary partition.
struct GridSize {
  int rows;
  int cols;
};
GridSize grid_for_tile(int width, int height, int tile_width, int tile_height);

/// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct Region {
  int x0, y0, x1, y1;
  int area() const noexcept { return (x1 - x0) * (y1 - y0); }
  friend bool operator==(const Region&, const Region&) = default;
};

/// Row-major tiling; region (r, c) spans rows [floor(r*H/R), floor((r+1)*H/R))
/// and cols [floor(c*W/C), floor((c+1)*W/C)).
std::vector<Region> partition_regions(int width, int height, int grid_rows, int grid_cols);

/// floor(code * bins / 2^code_bits). Throws if bins is not a power of two or
/// exceeds 2^code_bits.
unsigned quantize_code(unsigned code, int code_bits, int bins);

struct FeatureVector {
  std::vector<std::uint32_t> values;
  FeatureConfig config;

  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// Runs the configured codec: one code image for LDGP/LBP, four for LDP.
std::vector<CodeImage> code_images(const GrayImage& image, const FeatureConfig& config);

/// Spatial histogram of already-computed code images. Layout is region-major,
/// then code image, then bin.
FeatureVector histogram_feature(std::span<const CodeImage> codes, const FeatureConfig& config);

FeatureVector extract_feature(const GrayImage& image, const FeatureConfig& config);

/// Features for every dataset entry, in dataset order. Output does not depend
/// on `threads`.
std::vector<FeatureVector> extract_features(const LabeledDataset& dataset,
                                            const FeatureConfig& config, int threads = 1);

}  // namespace ldgp
