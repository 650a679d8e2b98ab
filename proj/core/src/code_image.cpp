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

#include "ldgp/code_image.hpp"

#include "ldgp/error.hpp"

namespace ldgp {

CodeImage::CodeImage(int width, int height, int code_bits, std::vector<std::uint8_t> codes)
    : width_(width), height_(height), code_bits_(code_bits), codes_(std::move(codes)) {
  require(width >= 1 && height >= 1, "code image dimensions must be positive");
  require(code_bits >= 1 && code_bits <= 8, "code width must be 1..8 bits");
  require(codes_.size() == static_cast<std::size_t>(width) * height,
          "code count does not match dimensions");
}

}  // namespace ldgp
