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

// Page preprocessing: grayscale conversion, automatic threshold, ink mask
// and removal of small connected objects.

#include <array>
#include <cstdint>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "hwr/error.hpp"
#include "hwr/image.hpp"

namespace hwr {

/// BT.601 luma, rounded half up: (299 R + 587 G + 114 B + 500) / 1000.
inline GrayImage to_grayscale(const RgbImage& rgb) {
  if (rgb.empty()) throw Error(ErrorCode::EmptyImage, "cannot convert a zero-sized image");
  GrayImage gray(rgb.width(), rgb.height());
  auto src = rgb.pixels();
  auto dst = gray.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const unsigned luma = (299u * src[i].r + 587u * src[i].g + 114u * src[i].b + 500u) / 1000u;
    dst[i] = static_cast<std::uint8_t>(luma > 255u ? 255u : luma);
  }
  return gray;
}

using Histogram = std::array<std::uint64_t, 256>;

inline Histogram histogram(const GrayImage& img) {
  Histogram h{};
  for (auto v : img.pixels()) ++h[v];
  return h;
}

namespace detail {

// Between-class variance scaled by N^2 equals D^2 / (n0 n1) with
// D = S0 n1 - S1 n0. Kept as an exact fraction so that equal splits compare
// equal and the smallest-threshold tie rule is deterministic.
struct VarianceFraction {
  unsigned __int128 num = 0;
  std::uint64_t den = 1;

  bool greater_than(const VarianceFraction& o) const noexcept {
    const unsigned __int128 qa = num / den;
    const unsigned __int128 qb = o.num / o.den;
    if (qa != qb) return qa > qb;
    const unsigned __int128 ra = num % den;
    const unsigned __int128 rb = o.num % o.den;
    return ra * o.den > rb * den;
  }
};

// Exact arithmetic needs |D| <= 255 N^2 / 4 to fit in 63 bits.
inline constexpr std::uint64_t kExactOtsuMaxPixels = std::uint64_t{1} << 26;

}  // namespace detail

/// Otsu's threshold: the t maximizing between-class variance of the split
/// {<= t} vs {> t}, smallest t on ties. Throws ConstantImage when every
/// sample has the same value.
inline std::uint8_t otsu_threshold(const GrayImage& img) {
  if (img.empty()) throw Error(ErrorCode::EmptyImage, "otsu_threshold on zero-sized image");
  const Histogram hist = histogram(img);

  std::uint64_t total = 0;
  std::uint64_t total_sum = 0;
  int occupied = 0;
  for (int v = 0; v < 256; ++v) {
    total += hist[v];
    total_sum += hist[v] * static_cast<std::uint64_t>(v);
    occupied += hist[v] != 0;
  }
  if (occupied < 2) throw Error(ErrorCode::ConstantImage, "image has a single intensity");

  int best = -1;
  if (total <= detail::kExactOtsuMaxPixels) {
    detail::VarianceFraction best_var;
    std::uint64_t n0 = 0;
    std::uint64_t s0 = 0;
    for (int t = 0; t < 255; ++t) {
      n0 += hist[t];
      s0 += hist[t] * static_cast<std::uint64_t>(t);
      const std::uint64_t n1 = total - n0;
      if (n0 == 0 || n1 == 0) continue;
      const std::int64_t d = static_cast<std::int64_t>(s0 * n1) -
                             static_cast<std::int64_t>((total_sum - s0) * n0);
      const std::uint64_t mag = static_cast<std::uint64_t>(d < 0 ? -d : d);
      const detail::VarianceFraction var{static_cast<unsigned __int128>(mag) * mag, n0 * n1};
      if (best < 0 || var.greater_than(best_var)) {
        best = t;
        best_var = var;
      }
    }
  } else {
    long double best_var = -1.0L;
    long double n0 = 0.0L;
    long double s0 = 0.0L;
    const long double n = static_cast<long double>(total);
    const long double s = static_cast<long double>(total_sum);
    for (int t = 0; t < 255; ++t) {
      n0 += static_cast<long double>(hist[t]);
      s0 += static_cast<long double>(hist[t]) * t;
      const long double n1 = n - n0;
      if (n0 == 0.0L || n1 == 0.0L) continue;
      const long double d = s0 * n1 - (s - s0) * n0;
      const long double var = d * d / (n0 * n1);
      if (var > best_var) {
        best = t;
        best_var = var;
      }
    }
  }
  return static_cast<std::uint8_t>(best);
}

/// Ink mask: 1 where intensity <= threshold (dark ink on light paper).
inline BinaryImage binarize(const GrayImage& img, std::uint8_t threshold) {
  if (img.empty()) throw Error(ErrorCode::EmptyImage, "binarize on zero-sized image");
  BinaryImage out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] <= threshold ? 1 : 0;
  return out;
}

enum class Connectivity { Four = 4, Eight = 8 };

using LabelImage = Raster<std::int32_t>;

struct ComponentLabeling {
  /// 0 = background, components numbered 1..count() in raster order of
  /// their first pixel.
  LabelImage labels;
  /// component_sizes[k - 1] is the pixel count of label k.
  std::vector<std::size_t> component_sizes;

  int width() const noexcept { return labels.width(); }
  int height() const noexcept { return labels.height(); }
  std::size_t count() const noexcept { return component_sizes.size(); }
  std::size_t size_of(std::int32_t label) const { return component_sizes.at(label - 1); }
};

inline ComponentLabeling connected_components(const BinaryImage& img,
                                              Connectivity connectivity = Connectivity::Eight) {
  static constexpr std::array<std::pair<int, int>, 8> kNeighbours = {{
      {-1, 0}, {1, 0}, {0, -1}, {0, 1},  // 4-neighbourhood first
      {-1, -1}, {-1, 1}, {1, -1}, {1, 1},
  }};
  const std::size_t neighbour_count = connectivity == Connectivity::Four ? 4 : 8;

  ComponentLabeling out{LabelImage(img.width(), img.height(), 0), {}};
  std::queue<std::pair<int, int>> frontier;
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img(r, c) == 0 || out.labels(r, c) != 0) continue;
      const auto label = static_cast<std::int32_t>(out.component_sizes.size() + 1);
      std::size_t size = 0;
      out.labels(r, c) = label;
      frontier.emplace(r, c);
      while (!frontier.empty()) {
        const auto [pr, pc] = frontier.front();
        frontier.pop();
        ++size;
        for (std::size_t k = 0; k < neighbour_count; ++k) {
          const int nr = pr + kNeighbours[k].first;
          const int nc = pc + kNeighbours[k].second;
          if (img.contains(nr, nc) && img(nr, nc) != 0 && out.labels(nr, nc) == 0) {
            out.labels(nr, nc) = label;
            frontier.emplace(nr, nc);
          }
        }
      }
      out.component_sizes.push_back(size);
    }
  }
  return out;
}

/// Drops every connected object with fewer than min_size pixels.
inline BinaryImage remove_small_components(const BinaryImage& img, std::size_t min_size = 15,
                                           Connectivity connectivity = Connectivity::Eight) {
  const ComponentLabeling cc = connected_components(img, connectivity);
  BinaryImage out(img.width(), img.height());
  auto labels = cc.labels.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && cc.size_of(labels[i]) >= min_size) dst[i] = 1;
  }
  return out;
}

}  // namespace hwr
