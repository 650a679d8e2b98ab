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

#include "ldgp/feature.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "ldgp/baseline.hpp"
#include "ldgp/derivative.hpp"
#include "ldgp/error.hpp"
#include "ldgp/ldgp_codec.hpp"
#include "parallel.hpp"

namespace ldgp {

std::string_view to_string(Descriptor d) noexcept {
  switch (d) {
    case Descriptor::kLdgp:
      return "ldgp";
    case Descriptor::kLdp:
      return "ldp";
    case Descriptor::kLbp:
      return "lbp";
  }
  return "?";
}

std::optional<Descriptor> parse_descriptor(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ldgp") return Descriptor::kLdgp;
  if (lower == "ldp") return Descriptor::kLdp;
  if (lower == "lbp") return Descriptor::kLbp;
  return std::nullopt;
}

int code_bits(Descriptor d) noexcept {
  return d == Descriptor::kLdgp ? kLdgpCodeBits : kBaselineCodeBits;
}

int images_per_descriptor(Descriptor d) noexcept { return d == Descriptor::kLdp ? 4 : 1; }

std::size_t feature_length(const FeatureConfig& config) noexcept {
  return static_cast<std::size_t>(config.regions()) * static_cast<std::size_t>(config.bins) *
         static_cast<std::size_t>(images_per_descriptor(config.descriptor));
}

namespace {

void require_bins(int code_width, int bins) {
  require(bins >= 1 && std::has_single_bit(static_cast<unsigned>(bins)),
          "bins must be a power of two");
  require(bins <= (1 << code_width),
          "bins (" + std::to_string(bins) + ") exceed the " + std::to_string(code_width) +
              "-bit code range");
}

}  // namespace

void validate(const FeatureConfig& config, int width, int height) {
  require(width >= 2 && height >= 2, "descriptor input must be at least 2x2");
  require_bins(code_bits(config.descriptor), config.bins);
  require(config.grid_rows >= 1 && config.grid_cols >= 1, "grid dimensions must be >= 1");
  require(config.grid_rows <= height && config.grid_cols <= width,
          "grid " + std::to_string(config.grid_rows) + "x" + std::to_string(config.grid_cols) +
              " is larger than the " + std::to_string(width) + "x" + std::to_string(height) +
              " image");
  if (config.descriptor != Descriptor::kLbp) {
    require(config.order >= 2 && config.order <= kMaxDerivativeOrder + 1,
            "order must be in [2, " + std::to_string(kMaxDerivativeOrder + 1) + "]");
  }
}

GridSize grid_for_tile(int width, int height, int tile_width, int tile_height) {
  require(tile_width >= 1 && tile_height >= 1, "tile dimensions must be >= 1");
  return {std::max(1, height / tile_height), std::max(1, width / tile_width)};
}

std::vector<Region> partition_regions(int width, int height, int grid_rows, int grid_cols) {
  require(grid_rows >= 1 && grid_cols >= 1, "grid dimensions must be >= 1");
  require(grid_rows <= height && grid_cols <= width, "grid larger than image");
  std::vector<Region> regions;
  regions.reserve(static_cast<std::size_t>(grid_rows) * grid_cols);
  const auto edge = [](int i, int extent, int parts) {
    return static_cast<int>(static_cast<long long>(i) * extent / parts);
  };
  for (int r = 0; r < grid_rows; ++r) {
    for (int c = 0; c < grid_cols; ++c) {
      regions.push_back({edge(c, width, grid_cols), edge(r, height, grid_rows),
                         edge(c + 1, width, grid_cols), edge(r + 1, height, grid_rows)});
    }
  }
  return regions;
}

unsigned quantize_code(unsigned code, int code_width, int bins) {
  require_bins(code_width, bins);
  require(code < (1u << code_width), "code exceeds its bit width");
  const int shift = code_width - std::countr_zero(static_cast<unsigned>(bins));
  return code >> shift;
}

std::vector<CodeImage> code_images(const GrayImage& image, const FeatureConfig& config) {
  switch (config.descriptor) {
    case Descriptor::kLdgp:
      return {ldgp_image(image, config.order)};
    case Descriptor::kLbp:
      return {lbp_image(image)};
    case Descriptor::kLdp: {
      auto four = ldp_image(image, config.order);
      return {std::make_move_iterator(four.begin()), std::make_move_iterator(four.end())};
    }
  }
  return {};
}

FeatureVector histogram_feature(std::span<const CodeImage> codes, const FeatureConfig& config) {
  require(!codes.empty(), "no code images to histogram");
  const int w = codes.front().width();
  const int h = codes.front().height();
  const int code_width = codes.front().code_bits();
  for (const auto& c : codes) {
    require(c.width() == w && c.height() == h && c.code_bits() == code_width,
            "code images must share dimensions and code width");
  }
  require_bins(code_width, config.bins);
  const int shift = code_width - std::countr_zero(static_cast<unsigned>(config.bins));
  const auto regions = partition_regions(w, h, config.grid_rows, config.grid_cols);

  const std::size_t bins = static_cast<std::size_t>(config.bins);
  FeatureVector feature{std::vector<std::uint32_t>(regions.size() * codes.size() * bins, 0u),
                        config};
  std::uint32_t* out = feature.values.data();
  for (const Region& region : regions) {
    for (const CodeImage& image : codes) {
      const auto data = image.codes();
      for (int y = region.y0; y < region.y1; ++y) {
        const std::uint8_t* row = data.data() + static_cast<std::size_t>(y) * w;
        for (int x = region.x0; x < region.x1; ++x) ++out[row[x] >> shift];
      }
      out += bins;
    }
  }
  return feature;
}

FeatureVector extract_feature(const GrayImage& image, const FeatureConfig& config) {
  validate(config, image.width(), image.height());
  const auto codes = code_images(image, config);
  return histogram_feature(codes, config);
}

std::vector<FeatureVector> extract_features(const LabeledDataset& dataset,
                                            const FeatureConfig& config, int threads) {
  std::vector<FeatureVector> features(dataset.image_count());
  detail::parallel_for(features.size(), threads, [&](std::size_t i) {
    features[i] = extract_feature(dataset[i].image, config);
  });
  return features;
}

}  // namespace ldgp
