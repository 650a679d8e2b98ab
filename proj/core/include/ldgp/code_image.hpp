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
#include <vector>

namespace ldgp {

/// Per-pixel descriptor codes, one code per byte. `code_bits` is 6 for LDGP
/// and 8 for the LBP/LDP baselines; every code is < 2^code_bits.
class CodeImage {
 public:
  CodeImage(int width, int height, int code_bits, std::vector<std::uint8_t> codes);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int code_bits() const noexcept { return code_bits_; }
  std::span<const std::uint8_t> codes() const noexcept { return codes_; }
  std::uint8_t at(int x, int y) const noexcept {
    return codes_[static_cast<std::size_t>(y) * width_ + x];
  }

  friend bool operator==(const CodeImage&, const CodeImage&) = default;

 private:
  int width_;
  int height_;
  int code_bits_;
  std::vector<std::uint8_t> codes_;
};

}  // namespace ldgp
