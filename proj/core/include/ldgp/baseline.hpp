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

#include <array>

#include "ldgp/code_image.hpp"
#include "ldgp/image.hpp"

namespace ldgp {

// Baselines use the 8-neighborhood ordered clockwise from the upper-left
// neighbor, first neighbor in the most significant bit. Off-image neighbors
// replicate the nearest border pixel.

inline constexpr int kBaselineCodeBits = 8;

/// Classic LBP: bit = 1 iff neighbor >= center.
CodeImage lbp_image(const GrayImage& image);

/// Order-n LDP, one 8-bit code image per direction (indexed by Direction).
/// Bit = 1 iff F(p) * F(neighbor) <= 0 on the order-(n-1) derivative field F.
std::array<CodeImage, 4> ldp_image(const GrayImage& image, int order);

}  // namespace ldgp
