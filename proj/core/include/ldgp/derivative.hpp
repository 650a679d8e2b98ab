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
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ldgp/image.hpp"

namespace ldgp {

/// Derivative direction. Offsets use image row order (y grows downward):
/// D0 = right, D45 = upper-right, D90 = up, D135 = upper-left.
enum class Direction : std::uint8_t { kD0 = 0, kD45 = 1, kD90 = 2, kD135 = 3 };

inline constexpr std::array<Direction, 4> kDirections = {Direction::kD0, Direction::kD45,
                                                         Direction::kD90, Direction::kD135};

struct Offset {
  int dx;
  int dy;
};

constexpr Offset offset(Direction d) noexcept {
  switch (d) {
    case Direction::kD0:
      return {1, 0};
    case Direction::kD45:
      return {1, -1};
    case Direction::kD90:
      return {0, -1};
    case Direction::kD135:
      return {-1, -1};
  }
  return {0, 0};
}

std::string_view to_string(Direction d) noexcept;

/// Highest derivative order supported; keeps |value| <= 255 * 2^order inside int32.
inline constexpr int kMaxDerivativeOrder = 20;

/// Signed derivative values for one direction and order, same size as the source image.
class DerivativeField {
 public:
  DerivativeField(int width, int height, int order, Direction direction,
                  std::vector<std::int32_t> values);

  /// Order-0 field: the image widened to signed integers.
  static DerivativeField from_image(const GrayImage& image, Direction direction);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int order() const noexcept { return order_; }
  Direction direction() const noexcept { return direction_; }
  std::span<const std::int32_t> values() const noexcept { return values_; }
  std::int32_t at(int x, int y) const noexcept {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }

  friend bool operator==(const DerivativeField&, const DerivativeField&) = default;

 private:
  int width_;
  int height_;
  int order_;
  Direction direction_;
  std::vector<std::int32_t> values_;
};

/// One application of the difference operator:
///   out(p) = in(p) - in(p + offset(direction))
/// A neighbor that falls outside the image is replaced by p itself, so the
/// result is 0 along the borders the offset points off of.
DerivativeField differentiate(const DerivativeField& field);

/// Order-n directional derivative of `image` (n applications of differentiate).
/// Throws Error(kInvalidArgument) for order outside [1, kMaxDerivativeOrder]
/// or images smaller than 2x2.
DerivativeField derivative_field(const GrayImage& image, Direction direction, int order);

/// The four direction fields at one order, indexed by Direction.
std::array<DerivativeField, 4> derivative_fields(const GrayImage& image, int order);

}  // namespace ldgp
