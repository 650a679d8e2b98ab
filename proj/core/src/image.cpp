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

#include "ldgp/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "ldgp/error.hpp"

#ifdef LDGP_HAVE_PNG
#include <png.h>
#endif

namespace ldgp {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  require(width >= 1 && height >= 1, "image dimensions must be positive");
  require(pixels_.size() == static_cast<std::size_t>(width) * height,
          "pixel count does not match width x height");
}

GrayImage GrayImage::filled(int width, int height, std::uint8_t value) {
  require(width >= 1 && height >= 1, "image dimensions must be positive");
  return GrayImage(width, height,
                   std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, value));
}

void require_pipeline_image(const GrayImage& image) {
  require(image.width() >= 2 && image.height() >= 2,
          "descriptor input must be at least 2x2");
}

std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) noexcept {
  const unsigned weighted = 299u * r + 587u * g + 114u * b;
  return static_cast<std::uint8_t>((weighted + 500u) / 1000u);
}

namespace {

class PgmReader {
 public:
  PgmReader(std::string bytes, const std::filesystem::path& path)
      : bytes_(std::move(bytes)), path_(path) {}

  GrayImage read() {
    if (bytes_.size() < 2 || bytes_[0] != 'P' || (bytes_[1] != '2' && bytes_[1] != '5')) {
      fail(ErrorKind::kUnsupportedFormat, path_.string());
    }
    const bool binary = bytes_[1] == '5';
    pos_ = 2;
    const long width = header_int();
    const long height = header_int();
    const long maxval = header_int();
    if (width <= 0 || height <= 0) {
      fail(ErrorKind::kUnreadableFile, path_.string() + " (zero-dimension image)");
    }
    if (maxval <= 0 || maxval > 255) {
      fail(ErrorKind::kUnsupportedFormat, path_.string() + " (maxval must be in 1..255)");
    }
    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<std::uint8_t> pixels;
    pixels.reserve(count);
    if (binary) {
      // Exactly one whitespace byte separates maxval from the raster.
      if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
        truncated();
      }
      ++pos_;
      if (bytes_.size() - pos_ < count) truncated();
      for (std::size_t i = 0; i < count; ++i) {
        const auto v = static_cast<std::uint8_t>(bytes_[pos_ + i]);
        if (v > maxval) truncated();
        pixels.push_back(v);
      }
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        const long v = header_int();
        if (v > maxval) truncated();
        pixels.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
  }

 private:
  [[noreturn]] void truncated() const { fail(ErrorKind::kUnreadableFile, path_.string()); }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long header_int() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      truncated();
    }
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > (1L << 30)) truncated();
      ++pos_;
    }
    return value;
  }

  std::string bytes_;
  std::filesystem::path path_;
  std::size_t pos_ = 0;
};

bool has_png_signature(const std::string& bytes) {
  static constexpr unsigned char kSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (bytes.size() < 8) return false;
  for (int i = 0; i < 8; ++i) {
    if (static_cast<unsigned char>(bytes[i]) != kSig[i]) return false;
  }
  return true;
}

#ifdef LDGP_HAVE_PNG
GrayImage decode_png(const std::string& bytes, const std::filesystem::path& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, bytes.data(), bytes.size())) {
    fail(ErrorKind::kUnreadableFile, path.string());
  }
  if (png.width == 0 || png.height == 0) {
    png_image_free(&png);
    fail(ErrorKind::kUnreadableFile, path.string() + " (zero-dimension image)");
  }
  const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, buffer.data(), 0, nullptr)) {
    png_image_free(&png);
    fail(ErrorKind::kUnreadableFile, path.string());
  }
  const int width = static_cast<int>(png.width);
  const int height = static_cast<int>(png.height);
  if (!color) return GrayImage(width, height, std::move(buffer));

  std::vector<std::uint8_t> gray(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < gray.size(); ++i) {
    gray[i] = luma(buffer[3 * i], buffer[3 * i + 1], buffer[3 * i + 2]);
  }
  return GrayImage(width, height, std::move(gray));
}
#endif

}  // namespace

bool png_supported() noexcept {
#ifdef LDGP_HAVE_PNG
  return true;
#else
  return false;
#endif
}

GrayImage load_image(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::kUnreadableFile, path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorKind::kUnreadableFile, path.string());

  if (has_png_signature(bytes)) {
#ifdef LDGP_HAVE_PNG
    return decode_png(bytes, path);
#else
    fail(ErrorKind::kUnsupportedFormat, path.string() + " (built without PNG support)");
#endif
  }
  return PgmReader(std::move(bytes), path).read();
}

void save_pgm(const GrayImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::kUnreadableFile, path.string() + " (cannot open for writing)");
  out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
  const auto px = image.pixels();
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
  if (!out) fail(ErrorKind::kUnreadableFile, path.string() + " (write failed)");
}

}  // namespace ldgp
