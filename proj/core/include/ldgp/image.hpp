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
#include <span>
#include <vector>

namespace ldgp {

/// 8-bit grayscale raster, row-major, immutable once built.
class GrayImage {
 public:
  GrayImage() = default;

  /// Throws Error(kInvalidArgument) unless width, height >= 1 and
  /// pixels.size() == width * height.
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  /// Constant image.
  static GrayImage filled(int width, int height, std::uint8_t value);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t at(int x, int y) const noexcept {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<const std::uint8_t> row(int y) const noexcept {
    return std::span<const std::uint8_t>(pixels_).subspan(
        static_cast<std::size_t>(y) * width_, width_);
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Throws unless the image is large enough for a derivative neighborhood.
void require_pipeline_image(const GrayImage& image);

/// Reads binary (P5) or ASCII (P2) PGM with maxval <= 255, and PNG when the
/// library was built with libpng. Color PNG input is reduced to integer luma.
GrayImage load_image(const std::filesystem::path& path);

/// Writes binary PGM (P5, maxval 255).
void save_pgm(const GrayImage& image, const std::filesystem::path& path);

/// Integer luma: round(0.299 R + 0.587 G + 0.114 B).
std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept;

bool png_supported() noexcept;

}  // namespace ldgp
