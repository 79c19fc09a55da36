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

// Synthetic page rendering from a template store. The recognizer applied
// to a rendered page must give the text back, which makes this the
// system-level test oracle.

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "hwr/error.hpp"
#include "hwr/image.hpp"
#include "hwr/recognition.hpp"
#include "hwr/templates.hpp"

namespace hwr {

struct RenderSpec {
  std::string text;
  int glyph_gap = 3;
  int word_gap = 12;
  int line_gap = 10;
  int margin = 5;
};

/// Throws InvalidConfig when the gaps cannot survive recognition (the word
/// gap must clear space_ratio of itself over the letter gap) and
/// UnrenderableCharacter for text outside the 62 classes, ' ' and '\n'.
inline void validate(const RenderSpec& spec, double space_ratio = kDefaultSpaceRatio) {
  if (spec.glyph_gap < 1) throw Error(ErrorCode::InvalidConfig, "glyph_gap must be >= 1");
  if (spec.line_gap < 1) throw Error(ErrorCode::InvalidConfig, "line_gap must be >= 1");
  if (spec.margin < 0) throw Error(ErrorCode::InvalidConfig, "margin must be >= 0");
  if (!(space_ratio > 0.0 && space_ratio <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "space_ratio must be in (0, 1]");
  }
  if (static_cast<double>(spec.word_gap) * space_ratio < static_cast<double>(spec.glyph_gap)) {
    throw Error(ErrorCode::InvalidConfig, "word_gap must be >= glyph_gap / space_ratio");
  }
  for (char ch : spec.text) {
    if (ch != ' ' && ch != '\n' && !label_index(ch)) {
      throw Error(ErrorCode::UnrenderableCharacter,
                  "character code " + std::to_string(static_cast<unsigned char>(ch)));
    }
  }
}

namespace detail {

struct PlacedGlyph {
  char label;
  int col;
};

// Glyph placement for one text line; a run of spaces becomes one word gap,
// leading and trailing spaces are ignored.
inline std::vector<PlacedGlyph> layout_line(std::string_view line, const RenderSpec& spec,
                                            int glyph_width, int& width) {
  std::vector<PlacedGlyph> placed;
  int cursor = 0;
  bool pending_space = false;
  for (char ch : line) {
    if (ch == ' ') {
      pending_space = !placed.empty();
      continue;
    }
    if (!placed.empty()) cursor += pending_space ? spec.word_gap : spec.glyph_gap;
    placed.push_back({ch, cursor});
    cursor += glyph_width;
    pending_space = false;
  }
  width = cursor;
  return placed;
}

}  // namespace detail

inline BinaryImage render_page(const RenderSpec& spec, const TemplateStore& store,
                               double space_ratio = kDefaultSpaceRatio) {
  validate(spec, space_ratio);

  std::vector<std::string_view> lines;
  if (!spec.text.empty()) {
    std::string_view rest = spec.text;
    while (true) {
      const auto nl = rest.find('\n');
      lines.push_back(rest.substr(0, nl));
      if (nl == std::string_view::npos) break;
      rest.remove_prefix(nl + 1);
    }
  }

  std::vector<std::vector<detail::PlacedGlyph>> layout;
  int content_width = 0;
  for (auto line : lines) {
    int w = 0;
    layout.push_back(detail::layout_line(line, spec, kTemplateCols, w));
    content_width = std::max(content_width, w);
  }
  const int line_count = static_cast<int>(lines.size());
  const int content_height =
      line_count == 0 ? 0 : line_count * kTemplateRows + (line_count - 1) * spec.line_gap;

  BinaryImage page(std::max(1, content_width + 2 * spec.margin),
                   std::max(1, content_height + 2 * spec.margin));
  for (int li = 0; li < line_count; ++li) {
    const int top = spec.margin + li * (kTemplateRows + spec.line_gap);
    for (const auto& g : layout[li]) {
      const BinaryImage& tpl = store.at(g.label);
      for (int r = 0; r < kTemplateRows; ++r) {
        for (int c = 0; c < kTemplateCols; ++c) page(top + r, spec.margin + g.col + c) = tpl(r, c);
      }
    }
  }
  return page;
}

}  // namespace hwr
