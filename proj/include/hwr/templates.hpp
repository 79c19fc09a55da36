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

// The 62-class template database and glyph shape normalization.

#include <array>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hwr/error.hpp"
#include "hwr/image.hpp"
#include "hwr/imaging.hpp"
#include "hwr/io.hpp"
#include "hwr/segmentation.hpp"

namespace hwr {

inline constexpr int kTemplateRows = 42;
inline constexpr int kTemplateCols = 24;

/// Store order, which is also the classification tie-break order.
inline constexpr std::string_view kLabels =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
inline constexpr std::size_t kLabelCount = 62;
static_assert(kLabels.size() == kLabelCount);

inline std::optional<std::size_t> label_index(char label) noexcept {
  const auto pos = kLabels.find(label);
  if (pos == std::string_view::npos) return std::nullopt;
  return pos;
}

/// Nearest-neighbour stretch to rows x cols; the source pixel for output
/// (r, c) is (floor(r * h / rows), floor(c * w / cols)). Callers pass a
/// clipped glyph so the ink fills the box. Aspect ratio is not preserved.
inline BinaryImage normalize_glyph(const BinaryImage& img, int rows = kTemplateRows,
                                   int cols = kTemplateCols) {
  if (img.empty() || count_foreground(img) == 0) {
    throw Error(ErrorCode::EmptyGlyph, "glyph has no ink");
  }
  const BinaryImage& src = img;
  const long h = src.height();
  const long w = src.width();
  BinaryImage out(cols, rows);
  bool inked = false;
  for (int r = 0; r < rows; ++r) {
    const int sr = static_cast<int>(r * h / rows);
    for (int c = 0; c < cols; ++c) {
      const std::uint8_t v = src(sr, static_cast<int>(c * w / cols));
      out(r, c) = v;
      inked = inked || v != 0;
    }
  }
  // Downsampling can step over every ink pixel of a sparse glyph; keep the
  // first one so a nonempty glyph never normalizes to a blank.
  if (!inked) {
    for (int r = 0; r < src.height() && !inked; ++r) {
      for (int c = 0; c < src.width(); ++c) {
        if (src(r, c) == 0) continue;
        out(static_cast<int>(r * rows / h), static_cast<int>(c * cols / w)) = 1;
        inked = true;
        break;
      }
    }
  }
  return out;
}

struct TemplateEntry {
  char label = '\0';
  BinaryImage image;
  bool operator==(const TemplateEntry&) const = default;
};

/// Immutable label -> 42x24 template map with exactly one entry per class,
/// kept in kLabels order.
class TemplateStore {
 public:
  /// Entries may come in any order; they are validated and sorted.
  static TemplateStore from_entries(std::vector<TemplateEntry> entries) {
    std::array<std::optional<TemplateEntry>, kLabelCount> slots;
    for (auto& entry : entries) {
      const auto idx = label_index(entry.label);
      if (!idx) {
        throw Error(ErrorCode::InvalidManifest,
                    std::string("label outside the 62-class set: '") + entry.label + "'");
      }
      if (slots[*idx]) {
        throw Error(ErrorCode::DuplicateLabel, std::string("label '") + entry.label + "'");
      }
      if (entry.image.width() != kTemplateCols || entry.image.height() != kTemplateRows) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string("template '") + entry.label + "' is not 42x24");
      }
      if (!is_binary(entry.image) || count_foreground(entry.image) == 0) {
        throw Error(ErrorCode::BlankTemplate, std::string("template '") + entry.label + "'");
      }
      slots[*idx] = std::move(entry);
    }
    TemplateStore store;
    store.entries_.reserve(kLabelCount);
    for (std::size_t i = 0; i < kLabelCount; ++i) {
      if (!slots[i]) throw Error(ErrorCode::MissingLabel, std::string("'") + kLabels[i] + "'");
      store.entries_.push_back(std::move(*slots[i]));
    }
    return store;
  }

  std::span<const TemplateEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  const BinaryImage& at(char label) const {
    const auto idx = label_index(label);
    if (!idx) throw Error(ErrorCode::MissingLabel, std::string("'") + label + "'");
    return entries_[*idx].image;
  }

  /// Label pairs whose templates are bit-identical. Self-recognition is
  /// only guaranteed when this is empty.
  std::vector<std::pair<char, char>> identical_pairs() const {
    std::vector<std::pair<char, char>> pairs;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      for (std::size_t j = i + 1; j < entries_.size(); ++j) {
        if (entries_[i].image == entries_[j].image) {
          pairs.emplace_back(entries_[i].label, entries_[j].label);
        }
      }
    }
    return pairs;
  }

  bool operator==(const TemplateStore&) const = default;

 private:
  TemplateStore() = default;
  std::vector<TemplateEntry> entries_;
};

/// Binarizes (Otsu, ink dark), clips and normalizes a template image.
inline BinaryImage prepare_template(const GrayImage& gray) {
  std::uint8_t threshold = 0;
  try {
    threshold = otsu_threshold(gray);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ConstantImage) throw;
    throw Error(ErrorCode::BlankTemplate, "template image has a single intensity");
  }
  const BinaryImage ink = binarize(gray, threshold);
  if (count_foreground(ink) == 0) throw Error(ErrorCode::BlankTemplate, "no ink");
  return normalize_glyph(clip(ink).image);
}

struct ManifestRecord {
  char label = '\0';
  std::filesystem::path path;
};

/// Parses `label<TAB>relative/path` records. Lines starting with '#' and
/// empty lines are skipped; paths resolve against base_dir.
inline std::vector<ManifestRecord> parse_manifest(std::istream& in,
                                                  const std::filesystem::path& base_dir) {
  std::vector<ManifestRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab != 1 || line.size() <= 2) {
      throw Error(ErrorCode::InvalidManifest,
                  "line " + std::to_string(line_no) + ": expected label<TAB>path");
    }
    const char label = line[0];
    if (!label_index(label)) {
      throw Error(ErrorCode::InvalidManifest, "line " + std::to_string(line_no) +
                                                  ": label outside the 62-class set");
    }
    for (const auto& r : records) {
      if (r.label == label) {
        throw Error(ErrorCode::DuplicateLabel, std::string("'") + label + "' at line " +
                                                   std::to_string(line_no));
      }
    }
    records.push_back({label, base_dir / line.substr(2)});
  }
  return records;
}

inline TemplateStore load_templates(const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw Error(ErrorCode::InvalidManifest, "cannot open " + manifest_path.string());
  const auto records = parse_manifest(in, manifest_path.parent_path());

  std::vector<TemplateEntry> entries;
  entries.reserve(records.size());
  for (const auto& rec : records) {
    GrayImage gray;
    try {
      gray = load_grayscale(rec.path);
    } catch (const Error& e) {
      throw Error(ErrorCode::UndecodableImage, std::string("template '") + rec.label +
                                                   "': " + e.what());
    }
    try {
      entries.push_back({rec.label, prepare_template(gray)});
    } catch (const Error& e) {
      throw Error(e.code(), std::string("template '") + rec.label + "': " + e.what());
    }
  }
  return TemplateStore::from_entries(std::move(entries));
}

}  // namespace hwr
