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

#include "ldgp/baseline.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ldgp/derivative.hpp"
#include "ldgp/error.hpp"

namespace ldgp {

namespace {

// Copy of `values` with a one-pixel replicated border on every side.
template <typename T>
std::vector<T> pad_replicate(std::span<const T> values, int w, int h) {
  const int pw = w + 2;
  std::vector<T> padded(static_cast<std::size_t>(pw) * (h + 2));
  for (int y = -1; y <= h; ++y) {
    const int sy = std::clamp(y, 0, h - 1);
    const T* src = values.data() + static_cast<std::size_t>(sy) * w;
    T* dst = padded.data() + static_cast<std::size_t>(y + 1) * pw;
    dst[0] = src[0];
    std::copy(src, src + w, dst + 1);
    dst[w + 1] = src[w - 1];
  }
  return padded;
}

// bit(center, neighbor) evaluated over the 8 neighbors, clockwise from upper-left.
template <typename T, typename Bit>
std::vector<std::uint8_t> neighbor_codes(std::span<const T> values, int w, int h, Bit bit) {
  const auto padded = pad_replicate(values, w, h);
  const std::ptrdiff_t pw = w + 2;
  const std::array<std::ptrdiff_t, 8> rel = {-pw - 1, -pw, -pw + 1, 1, pw + 1, pw, pw - 1, -1};

  std::vector<std::uint8_t> codes(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    const T* row = padded.data() + (y + 1) * pw + 1;
    std::uint8_t* out = codes.data() + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) {
      const T* c = row + x;
      const T center = *c;
      unsigned code = 0;
      for (std::ptrdiff_t r : rel) code = (code << 1) | bit(center, c[r]);
      out[x] = static_cast<std::uint8_t>(code);
    }
  }
  return codes;
}

}  // namespace

CodeImage lbp_image(const GrayImage& image) {
  require_pipeline_image(image);
  auto codes = neighbor_codes<std::uint8_t>(
      image.pixels(), image.width(), image.height(),
      [](std::uint8_t center, std::uint8_t n) { return n >= center ? 1u : 0u; });
  return CodeImage(image.width(), image.height(), kBaselineCodeBits, std::move(codes));
}

std::array<CodeImage, 4> ldp_image(const GrayImage& image, int order) {
  require(order >= 2 && order <= kMaxDerivativeOrder + 1,
          "LDP order must be in [2, " + std::to_string(kMaxDerivativeOrder + 1) + "]");
  const auto fields = derivative_fields(image, order - 1);
  const auto encode = [&](const DerivativeField& f) {
    auto codes = neighbor_codes<std::int32_t>(
        f.values(), f.width(), f.height(), [](std::int32_t center, std::int32_t n) {
          return static_cast<std::int64_t>(center) * n <= 0 ? 1u : 0u;
        });
    return CodeImage(f.width(), f.height(), kBaselineCodeBits, std::move(codes));
  };
  return {encode(fields[0]), encode(fields[1]), encode(fields[2]), encode(fields[3])};
}

}  // namespace ldgp
