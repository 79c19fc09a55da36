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

// Template matching by 2-D correlation coefficient, and assembly of the
// recognized labels into words and lines.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hwr/error.hpp"
#include "hwr/image.hpp"
#include "hwr/segmentation.hpp"
#include "hwr/templates.hpp"

namespace hwr {

/// Pearson correlation over corresponding pixels. When either image has
/// zero variance the result is 1 if both are the same constant, else 0.
template <typename A, typename TagA, typename B, typename TagB>
double corr2(const Raster<A, TagA>& a, const Raster<B, TagB>& b) {
  if (!a.same_shape(b)) throw Error(ErrorCode::DimensionMismatch, "corr2 operands differ in shape");
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  const std::size_t n = pa.size();
  if (n == 0) throw Error(ErrorCode::EmptyImage, "corr2 on zero-sized images");

  double mean_a = 0.0;
  double mean_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_a += static_cast<double>(pa[i]);
    mean_b += static_cast<double>(pb[i]);
  }
  mean_a /= static_cast<double>(n);
  mean_b /= static_cast<double>(n);

  double cross = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = static_cast<double>(pa[i]) - mean_a;
    const double db = static_cast<double>(pb[i]) - mean_b;
    cross += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) {
    if (var_a == 0.0 && var_b == 0.0 && static_cast<double>(pa[0]) == static_cast<double>(pb[0])) {
      return 1.0;
    }
    return 0.0;
  }
  return std::clamp(cross / std::sqrt(var_a * var_b), -1.0, 1.0);
}

struct Classification {
  char label = '\0';
  double score = 0.0;
  /// One correlation per template, in the order the templates were given.
  std::vector<double> scores;
};

/// Argmax of corr2 against each template; first template wins ties.
/// Accepting a plain span lets callers score against template lists that
/// are not a full TemplateStore (e.g. timing runs with repeated labels).
inline Classification classify(const BinaryImage& glyph, std::span<const TemplateEntry> templates) {
  if (templates.empty()) throw Error(ErrorCode::MissingLabel, "no templates to match against");
  const int rows = templates.front().image.height();
  const int cols = templates.front().image.width();
  const BinaryImage normalized = normalize_glyph(glyph, rows, cols);

  Classification out;
  out.scores.reserve(templates.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < templates.size(); ++i) {
    out.scores.push_back(corr2(normalized, templates[i].image));
    if (out.scores[i] > out.scores[best]) best = i;
  }
  out.label = templates[best].label;
  out.score = out.scores[best];
  return out;
}

inline Classification classify(const Glyph& glyph, const TemplateStore& store) {
  return classify(glyph.image, store.entries());
}

struct RankedLabel {
  char label;
  double score;
};

/// The best `count` labels other than the winner, highest score first.
inline std::vector<RankedLabel> runners_up(const Classification& c,
                                           std::span<const TemplateEntry> templates,
                                           std::size_t count = 3) {
  std::vector<std::size_t> order(c.scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return c.scores[x] > c.scores[y]; });
  std::vector<RankedLabel> out;
  bool skipped_winner = false;
  for (auto idx : order) {
    if (!skipped_winner && templates[idx].label == c.label && c.scores[idx] == c.score) {
      skipped_winner = true;
      continue;
    }
    if (out.size() == count) break;
    out.push_back({templates[idx].label, c.scores[idx]});
  }
  return out;
}

inline constexpr double kDefaultSpaceRatio = 0.75;

/// ratio x max(spaces); +inf (never break) for an empty or all-zero list.
inline double word_break_threshold(std::span<const int> spaces,
                                   double ratio = kDefaultSpaceRatio) {
  const auto it = std::max_element(spaces.begin(), spaces.end());
  if (it == spaces.end() || *it <= 0) return std::numeric_limits<double>::infinity();
  return ratio * static_cast<double>(*it);
}

struct GlyphResult {
  Classification classification;
  int space_before = 0;
};

struct LineTranscript {
  std::vector<GlyphResult> glyph_results;
  std::string text;
};

/// Concatenates labels, inserting one space before every glyph (after the
/// first) whose gap reaches the line's word-break threshold.
inline LineTranscript assemble_line(std::vector<GlyphResult> results,
                                    double ratio = kDefaultSpaceRatio) {
  std::vector<int> gaps;
  for (std::size_t i = 1; i < results.size(); ++i) gaps.push_back(results[i].space_before);
  const double threshold = word_break_threshold(gaps, ratio);

  LineTranscript out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i > 0 && static_cast<double>(results[i].space_before) >= threshold) out.text += ' ';
    out.text += results[i].classification.label;
  }
  out.glyph_results = std::move(results);
  return out;
}

/// Line texts joined by '\n', with a trailing newline; "" for no lines.
inline std::string assemble_page(std::span<const LineTranscript> lines) {
  std::string text;
  for (const auto& line : lines) {
    text += line.text;
    text += '\n';
  }
  return text;
}

}  // namespace hwr
