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

#include "ldgp/ldgp_codec.hpp"

#include "ldgp/derivative.hpp"
#include "ldgp/error.hpp"

namespace ldgp {

CodeImage ldgp_image(const GrayImage& image, int order) {
  require(order >= 2 && order <= kMaxDerivativeOrder + 1,
          "LDGP order must be in [2, " + std::to_string(kMaxDerivativeOrder + 1) + "]");
  const auto fields = derivative_fields(image, order - 1);
  const auto f0 = fields[0].values();
  const auto f45 = fields[1].values();
  const auto f90 = fields[2].values();
  const auto f135 = fields[3].values();

  std::vector<std::uint8_t> codes(image.size());
  for (std::size_t i = 0; i < codes.size(); ++i) {
    codes[i] = ldgp_code(f0[i], f45[i], f90[i], f135[i]);
  }
  return CodeImage(image.width(), image.height(), kLdgpCodeBits, std::move(codes));
}

}  // namespace ldgp
