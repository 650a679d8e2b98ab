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

#include "ldgp/derivative.hpp"

#include <algorithm>

#include "ldgp/error.hpp"

namespace ldgp {

std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::kD0:
      return "0";
    case Direction::kD45:
      return "45";
    case Direction::kD90:
      return "90";
    case Direction::kD135:
      return "135";
  }
  return "?";
}

DerivativeField::DerivativeField(int width, int height, int order, Direction direction,
                                 std::vector<std::int32_t> values)
    : width_(width), height_(height), order_(order), direction_(direction),
      values_(std::move(values)) {
  require(width >= 1 && height >= 1, "derivative field dimensions must be positive");
  require(values_.size() == static_cast<std::size_t>(width) * height,
          "derivative field value count does not match dimensions");
}

DerivativeField DerivativeField::from_image(const GrayImage& image, Direction direction) {
  const auto px = image.pixels();
  return DerivativeField(image.width(), image.height(), 0, direction,
                         std::vector<std::int32_t>(px.begin(), px.end()));
}

DerivativeField differentiate(const DerivativeField& field) {
  const int w = field.width();
  const int h = field.height();
  const auto [dx, dy] = offset(field.direction());
  const auto in = field.values();
  std::vector<std::int32_t> out(in.size(), 0);

  // Pixels whose neighbor lies inside the image; everything else stays 0.
  const int x_lo = std::max(0, -dx);
  const int x_hi = std::min(w, w - dx);
  const int y_lo = std::max(0, -dy);
  const int y_hi = std::min(h, h - dy);
  const std::ptrdiff_t step = static_cast<std::ptrdiff_t>(dy) * w + dx;

  for (int y = y_lo; y < y_hi; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * w;
    const std::int32_t* src = in.data() + row;
    std::int32_t* dst = out.data() + row;
    for (int x = x_lo; x < x_hi; ++x) {
      dst[x] = src[x] - src[x + step];
    }
  }
  return DerivativeField(w, h, field.order() + 1, field.direction(), std::move(out));
}

DerivativeField derivative_field(const GrayImage& image, Direction direction, int order) {
  require(order >= 1 && order <= kMaxDerivativeOrder,
          "derivative order must be in [1, " + std::to_string(kMaxDerivativeOrder) + "]");
  require_pipeline_image(image);
  DerivativeField field = DerivativeField::from_image(image, direction);
  for (int k = 0; k < order; ++k) field = differentiate(field);
  return field;
}

std::array<DerivativeField, 4> derivative_fields(const GrayImage& image, int order) {
  return {derivative_field(image, Direction::kD0, order),
          derivative_field(image, Direction::kD45, order),
          derivative_field(image, Direction::kD90, order),
          derivative_field(image, Direction::kD135, order)};
}

}  // namespace ldgp
