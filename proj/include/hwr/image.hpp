// Copyright 2026 The hwr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License. You may
// obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hwr/error.hpp"

namespace hwr {

/// Row-major 2-D pixel grid. The tag parameter keeps images with the same
/// storage type but different meaning (gray levels vs. ink mask) apart.
template <typename T, typename Tag = void>
class Raster {
 public:
  using value_type = T;

  Raster() = default;

  Raster(int width, int height, T fill = T{}) : width_(width), height_(height) {
    if (width < 0 || height < 0) {
      throw Error(ErrorCode::EmptyImage, "negative raster dimensions");
    }
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  Raster(int width, int height, std::vector<T> data)
      : width_(width), height_(height), data_(std::move(data)) {
    if (width < 0 || height < 0 ||
        data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw Error(ErrorCode::DimensionMismatch, "pixel buffer does not match raster dimensions");
    }
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool empty() const noexcept { return width_ == 0 || height_ == 0; }
  std::size_t size() const noexcept { return data_.size(); }

  T& operator()(int row, int col) noexcept { return data_[index(row, col)]; }
  const T& operator()(int row, int col) const noexcept { return data_[index(row, col)]; }

  bool contains(int row, int col) const noexcept {
    return row >= 0 && col >= 0 && row < height_ && col < width_;
  }

  std::span<T> pixels() noexcept { return data_; }
  std::span<const T> pixels() const noexcept { return data_; }

  std::span<const T> row(int r) const noexcept {
    return std::span<const T>(data_).subspan(index(r, 0), static_cast<std::size_t>(width_));
  }

  bool same_shape(const auto& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  bool operator==(const Raster&) const = default;

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  bool operator==(const Rgb&) const = default;
};

struct GrayTag {};
struct BinaryTag {};

using RgbImage = Raster<Rgb>;
/// 8-bit intensities, 0 = black.
using GrayImage = Raster<std::uint8_t, GrayTag>;
/// Ink mask: 1 = foreground ink, 0 = background.
using BinaryImage = Raster<std::uint8_t, BinaryTag>;

inline std::size_t count_foreground(const BinaryImage& img) noexcept {
  std::size_t n = 0;
  for (auto v : img.pixels()) n += v != 0;
  return n;
}

inline bool is_binary(const BinaryImage& img) noexcept {
  for (auto v : img.pixels()) {
    if (v > 1) return false;
  }
  return true;
}

/// Copy of the rectangle [row, row+height) x [col, col+width).
template <typename T, typename Tag>
Raster<T, Tag> crop(const Raster<T, Tag>& img, int row, int col, int height, int width) {
  Raster<T, Tag> out(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) out(r, c) = img(row + r, col + c);
  }
  return out;
}

}  // namespace hwr
