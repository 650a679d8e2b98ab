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

#include "ldgp/code_image.hpp"
#include "ldgp/image.hpp"

namespace ldgp {

inline constexpr int kLdgpCodeBits = 6;

/// Pair comparator: 1 iff a > b. Ties fall to 0.
constexpr unsigned encode_pair(std::int32_t a, std::int32_t b) noexcept { return a > b ? 1u : 0u; }

/// 6-bit LDGP code from four same-order directional derivatives at one pixel.
/// Bits, MSB first: (0,45) (0,90) (0,135) (45,90) (45,135) (90,135).
constexpr std::uint8_t ldgp_code(std::int32_t d0, std::int32_t d45, std::int32_t d90,
                                 std::int32_t d135) noexcept {
  return static_cast<std::uint8_t>(
      (encode_pair(d0, d45) << 5) | (encode_pair(d0, d90) << 4) | (encode_pair(d0, d135) << 3) |
      (encode_pair(d45, d90) << 2) | (encode_pair(d45, d135) << 1) | encode_pair(d90, d135));
}

/// Order-n LDGP code image, built from the four order-(n-1) derivative fields.
/// Requires 2 <= n <= kMaxDerivativeOrder + 1.
CodeImage ldgp_image(const GrayImage& image, int order);

}  // namespace ldgp
