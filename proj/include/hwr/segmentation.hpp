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

// Projection-profile segmentation: a page splits into lines at blank rows,
// a line splits into glyphs at blank columns. "Blank" means the row or
// column sum is <= blank_threshold (0 unless the caller asks otherwise).

#include <cstddef>
#include <vector>

#include "hwr/error.hpp"
#include "hwr/image.hpp"

namespace hwr {

/// Inclusive pixel extent inside a source image.
struct BBox {
  int row_min = 0;
  int row_max = 0;
  int col_min = 0;
  int col_max = 0;

  int height() const noexcept { return row_max - row_min + 1; }
  int width() const noexcept { return col_max - col_min + 1; }
  bool operator==(const BBox&) const = default;
};

struct Clipped {
  BinaryImage image;
  BBox box;
};

inline Clipped clip(const BinaryImage& img) {
  BBox box{img.height(), -1, img.width(), -1};
  for (int r = 0; r < img.height(); ++r) {
    for (int c = 0; c < img.width(); ++c) {
      if (img(r, c) == 0) continue;
      if (r < box.row_min) box.row_min = r;
      if (r > box.row_max) box.row_max = r;
      if (c < box.col_min) box.col_min = c;
      if (c > box.col_max) box.col_max = c;
    }
  }
  if (box.row_max < 0) throw Error(ErrorCode::NothingToClip, "image has no foreground");
  return {crop(img, box.row_min, box.col_min, box.height(), box.width()), box};
}

struct LineSegment {
  BinaryImage image;  // clipped
  int row_offset = 0;  // top row in page coordinates
  int col_offset = 0;  // left column in page coordinates
};

struct Glyph {
  BinaryImage image;     // clipped on all four sides
  int space_before = 0;  // blank columns since the previous glyph; 0 for the first
  int col_offset = 0;    // left column relative to the line image
  int row_offset = 0;    // top row relative to the line image
};

namespace detail {

struct Run {
  int begin;
  int end;  // exclusive
};

inline std::vector<Run> inked_runs(const std::vector<std::size_t>& profile,
                                   std::size_t blank_threshold) {
  std::vector<Run> runs;
  int start = -1;
  const int n = static_cast<int>(profile.size());
  for (int i = 0; i < n; ++i) {
    const bool inked = profile[i] > blank_threshold;
    if (inked && start < 0) start = i;
    if (!inked && start >= 0) {
      runs.push_back({start, i});
      start = -1;
    }
  }
  if (start >= 0) runs.push_back({start, n});
  return runs;
}

}  // namespace detail

inline std::vector<std::size_t> row_profile(const BinaryImage& img) {
  std::vector<std::size_t> sums(static_cast<std::size_t>(img.height()), 0);
  for (int r = 0; r < img.height(); ++r) {
    for (auto v : img.row(r)) sums[r] += v;
  }
  return sums;
}

inline std::vector<std::size_t> column_profile(const BinaryImage& img) {
  std::vector<std::size_t> sums(static_cast<std::size_t>(img.width()), 0);
  for (int r = 0; r < img.height(); ++r) {
    auto row = img.row(r);
    for (int c = 0; c < img.width(); ++c) sums[c] += row[c];
  }
  return sums;
}

/// Lines are the maximal runs of inked rows, top to bottom, each clipped.
inline std::vector<LineSegment> split_lines(const BinaryImage& page,
                                            std::size_t blank_threshold = 0) {
  std::vector<LineSegment> lines;
  for (const auto run : detail::inked_runs(row_profile(page), blank_threshold)) {
    const BinaryImage band = crop(page, run.begin, 0, run.end - run.begin, page.width());
    Clipped clipped = clip(band);
    lines.push_back({std::move(clipped.image), run.begin + clipped.box.row_min,
                     clipped.box.col_min});
  }
  return lines;
}

/// Glyphs are the maximal runs of inked columns of a clipped line, left to
/// right. Each glyph is re-clipped vertically to its own ink.
inline std::vector<Glyph> split_glyphs(const LineSegment& line, std::size_t blank_threshold = 0) {
  const BinaryImage& img = line.image;
  std::vector<Glyph> glyphs;
  int previous_end = -1;
  for (const auto run : detail::inked_runs(column_profile(img), blank_threshold)) {
    const BinaryImage strip = crop(img, 0, run.begin, img.height(), run.end - run.begin);
    Clipped clipped = clip(strip);
    Glyph g;
    g.image = std::move(clipped.image);
    g.space_before = previous_end < 0 ? 0 : run.begin - previous_end;
    g.col_offset = run.begin + clipped.box.col_min;
    g.row_offset = clipped.box.row_min;
    glyphs.push_back(std::move(g));
    previous_end = run.end;
  }
  return glyphs;
}

}  // namespace hwr
