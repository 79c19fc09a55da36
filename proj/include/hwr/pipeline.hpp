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

// End-to-end recognition: decode, binarize, denoise, segment, classify,
// assemble, write.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwr/error.hpp"
#include "hwr/image.hpp"
#include "hwr/imaging.hpp"
#include "hwr/io.hpp"
#include "hwr/recognition.hpp"
#include "hwr/segmentation.hpp"
#include "hwr/templates.hpp"

namespace hwr {

struct RecognizeOptions {
  std::size_t min_component_size = 15;
  double space_ratio = kDefaultSpaceRatio;
  Connectivity connectivity = Connectivity::Eight;
};

struct RecognizedLine {
  LineSegment segment;
  std::vector<Glyph> glyphs;
  LineTranscript transcript;
};

struct PageRecognition {
  BinaryImage denoised;
  std::vector<RecognizedLine> lines;
  std::string text;
};

inline void validate(const RecognizeOptions& opts) {
  if (!(opts.space_ratio > 0.0 && opts.space_ratio <= 1.0)) {
    throw Error(ErrorCode::InvalidConfig, "space_ratio must be in (0, 1]");
  }
}

/// Recognition from an ink mask (denoising included).
inline PageRecognition recognize_ink(const BinaryImage& ink, const TemplateStore& store,
                                     const RecognizeOptions& opts = {}) {
  validate(opts);
  PageRecognition page;
  page.denoised = remove_small_components(ink, opts.min_component_size, opts.connectivity);

  std::vector<LineTranscript> transcripts;
  for (auto& segment : split_lines(page.denoised)) {
    RecognizedLine line;
    line.glyphs = split_glyphs(segment);
    std::vector<GlyphResult> results;
    results.reserve(line.glyphs.size());
    for (const auto& g : line.glyphs) results.push_back({classify(g, store), g.space_before});
    line.transcript = assemble_line(std::move(results), opts.space_ratio);
    line.segment = std::move(segment);
    transcripts.push_back(line.transcript);
    page.lines.push_back(std::move(line));
  }
  page.text = assemble_page(transcripts);
  return page;
}

/// Throws ConstantImage for a single-intensity page.
inline PageRecognition recognize_page(const GrayImage& gray, const TemplateStore& store,
                                      const RecognizeOptions& opts = {}) {
  return recognize_ink(binarize(gray, otsu_threshold(gray)), store, opts);
}

struct PipelineConfig {
  std::filesystem::path input_path;
  std::filesystem::path templates_manifest;
  std::filesystem::path output_path;
  std::size_t min_component_size = 15;
  double space_ratio = kDefaultSpaceRatio;
  int connectivity = 8;
  std::optional<std::filesystem::path> debug_dump;
  std::optional<std::filesystem::path> diagnostics;
};

enum ExitStatus : int {
  kExitOk = 0,
  kExitIoError = 1,
  kExitInvalidConfig = 2,
  kExitDegenerateImage = 3,
};

inline int exit_status_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IoError:
    case ErrorCode::UndecodableImage:
      return kExitIoError;
    case ErrorCode::EmptyImage:
    case ErrorCode::ConstantImage:
    case ErrorCode::NothingToClip:
    case ErrorCode::EmptyGlyph:
    case ErrorCode::DimensionMismatch:
      return kExitDegenerateImage;
    default:
      return kExitInvalidConfig;
  }
}

inline RecognizeOptions to_options(const PipelineConfig& cfg) {
  if (cfg.connectivity != 4 && cfg.connectivity != 8) {
    throw Error(ErrorCode::InvalidConfig, "connectivity must be 4 or 8");
  }
  RecognizeOptions opts;
  opts.min_component_size = cfg.min_component_size;
  opts.space_ratio = cfg.space_ratio;
  opts.connectivity = cfg.connectivity == 4 ? Connectivity::Four : Connectivity::Eight;
  validate(opts);
  return opts;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

/// One JSON object per glyph: line, glyph, label, score, top-3 runners-up.
inline std::string diagnostics_jsonl(const PageRecognition& page, const TemplateStore& store) {
  std::string out;
  for (std::size_t li = 0; li < page.lines.size(); ++li) {
    const auto& results = page.lines[li].transcript.glyph_results;
    for (std::size_t gi = 0; gi < results.size(); ++gi) {
      const Classification& c = results[gi].classification;
      nlohmann::ordered_json record;
      record["line"] = li;
      record["glyph"] = gi;
      record["label"] = std::string(1, c.label);
      record["score"] = c.score;
      record["runners_up"] = nlohmann::ordered_json::array();
      for (const auto& ru : runners_up(c, store.entries())) {
        record["runners_up"].push_back({{"label", std::string(1, ru.label)}, {"score", ru.score}});
      }
      out += record.dump();
      out += '\n';
    }
  }
  return out;
}

/// Per-glyph PNG crops plus glyphs.tsv (line, glyph, col_offset, space_before).
inline void write_debug_dump(const std::filesystem::path& dir, const PageRecognition& page) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string());
  std::string sidecar = "# line\tglyph\tcol_offset\tspace_before\n";
  for (std::size_t li = 0; li < page.lines.size(); ++li) {
    const auto& glyphs = page.lines[li].glyphs;
    for (std::size_t gi = 0; gi < glyphs.size(); ++gi) {
      char name[48];
      std::snprintf(name, sizeof name, "line%03zu_glyph%03zu.png", li, gi);
      write_binary(dir / name, glyphs[gi].image);
      sidecar += std::to_string(li) + '\t' + std::to_string(gi) + '\t' +
                 std::to_string(glyphs[gi].col_offset) + '\t' +
                 std::to_string(glyphs[gi].space_before) + '\n';
    }
  }
  write_text_file(dir / "glyphs.tsv", sidecar);
}

/// Runs the whole recognition flow for one page and returns the process
/// exit status. Diagnostics go to `log`.
///
/// A single-intensity page carries no threshold. It still produces an
/// empty output file; a light page (>= 128) counts as blank paper and
/// succeeds, a dark one is reported as a degenerate image.
inline int run_pipeline(const PipelineConfig& cfg, std::ostream& log) {
  RecognizeOptions opts;
  std::optional<TemplateStore> store;
  try {
    opts = to_options(cfg);
    store.emplace(load_templates(cfg.templates_manifest));
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  for (const auto& [a, b] : store->identical_pairs()) {
    log << "warning: templates '" << a << "' and '" << b << "' are identical\n";
  }

  try {
    const GrayImage gray = load_grayscale(cfg.input_path);
    std::uint8_t threshold = 0;
    try {
      threshold = otsu_threshold(gray);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConstantImage) throw;
      write_text_file(cfg.output_path, "");
      if (gray.pixels()[0] >= 128) {
        log << "note: blank page (" << e.what() << ")\n";
        return kExitOk;
      }
      log << "error: " << e.what() << '\n';
      return kExitDegenerateImage;
    }

    const PageRecognition page = recognize_ink(binarize(gray, threshold), *store, opts);
    write_text_file(cfg.output_path, page.text);
    if (cfg.diagnostics) write_text_file(*cfg.diagnostics, diagnostics_jsonl(page, *store));
    if (cfg.debug_dump) write_debug_dump(*cfg.debug_dump, page);
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return exit_status_for(e.code());
  }
  return kExitOk;
}

}  // namespace hwr
