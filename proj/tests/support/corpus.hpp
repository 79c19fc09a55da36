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

// Random page and text generators shared by the unit and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "hwr/image.hpp"
#include "hwr/segmentation.hpp"
#include "hwr/templates.hpp"

namespace hwr::corpus {

/// Page with random-walk strokes; some fall below the default object size.
template <typename Rng>
BinaryImage random_page(Rng& rng) {
  std::uniform_int_distribution<int> dim(40, 200);
  BinaryImage page(dim(rng), dim(rng));
  std::uniform_int_distribution<int> strokes(3, 30);
  std::uniform_int_distribution<int> length(3, 60);
  std::uniform_int_distribution<int> row(0, page.height() - 1);
  std::uniform_int_distribution<int> col(0, page.width() - 1);
  std::uniform_int_distribution<int> step(-1, 1);
  const int n = strokes(rng);
  for (int s = 0; s < n; ++s) {
    int r = row(rng);
    int c = col(rng);
    const int len = length(rng);
    for (int i = 0; i < len; ++i) {
      page(r, c) = 1;
      r = std::clamp(r + step(rng), 0, page.height() - 1);
      c = std::clamp(c + step(rng), 0, page.width() - 1);
    }
  }
  return page;
}

/// Pastes every glyph back at its page position.
inline BinaryImage reassemble(int width, int height, const std::vector<LineSegment>& lines,
                              const std::vector<std::vector<Glyph>>& glyphs) {
  BinaryImage out(width, height);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    for (const auto& g : glyphs[li]) {
      for (int r = 0; r < g.image.height(); ++r) {
        for (int c = 0; c < g.image.width(); ++c) {
          if (!g.image(r, c)) continue;
          out(lines[li].row_offset + g.row_offset + r, lines[li].col_offset + g.col_offset + c) = 1;
        }
      }
    }
  }
  return out;
}

template <typename Rng>
std::string random_word(Rng& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<std::size_t> ch(0, kLabelCount - 1);
  std::string w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w += kLabels[ch(rng)];
  return w;
}

/// Words are laid out over lines in order; every line gets at least one.
inline std::string join_words(const std::vector<std::string>& words,
                              const std::vector<int>& words_per_line) {
  std::string text;
  std::size_t k = 0;
  for (std::size_t li = 0; li < words_per_line.size(); ++li) {
    if (li) text += '\n';
    for (int w = 0; w < words_per_line[li]; ++w) {
      if (w) text += ' ';
      text += words[k++];
    }
  }
  return text;
}

/// Text of 1-6 words over 1-3 lines, at most 40 characters.
template <typename Rng>
std::string random_text(Rng& rng) {
  std::uniform_int_distribution<int> word_count(1, 6);
  const int words = word_count(rng);
  std::uniform_int_distribution<int> line_count(1, std::min(3, words));
  const int lines = line_count(rng);

  // Split the words into `lines` nonempty groups.
  std::vector<int> per_line(static_cast<std::size_t>(lines), 1);
  std::uniform_int_distribution<int> which(0, lines - 1);
  for (int i = lines; i < words; ++i) ++per_line[which(rng)];

  // Budget: 40 chars minus separators, shared between words.
  const int separators = words - 1;
  const int max_word = std::max(1, (40 - separators) / words);
  std::vector<std::string> list;
  for (int i = 0; i < words; ++i) list.push_back(random_word(rng, std::min(max_word, 8)));
  return join_words(list, per_line);
}

}  // namespace hwr::corpus
