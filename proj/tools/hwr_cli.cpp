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

// Command line front end: `hwr recognize`, `hwr render` and
// `hwr sample-templates`.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hwr/hwr.hpp"

namespace {

// Lets `--text 'ab\ncd'` express a line break from a plain shell string.
std::string unescape_newlines(const std::string& in) {
  std::string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == '\\' && i + 1 < in.size() && in[i + 1] == 'n') {
      out += '\n';
      ++i;
    } else {
      out += in[i];
    }
  }
  return out;
}

int run_render(const hwr::RenderSpec& spec, const std::string& manifest,
               const std::string& output) {
  try {
    const hwr::TemplateStore store = hwr::load_templates(manifest);
    hwr::write_binary(output, hwr::render_page(spec, store));
  } catch (const hwr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == hwr::ErrorCode::IoError ? hwr::kExitIoError : hwr::kExitInvalidConfig;
  }
  return hwr::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Template-matching recognizer for non-connected handwritten text"};
  app.require_subcommand(1);

  hwr::PipelineConfig cfg;
  std::string debug_dir;
  std::string diagnostics;
  auto* recognize = app.add_subcommand("recognize", "Convert a page image to a text file");
  recognize->add_option("--input", cfg.input_path, "Page image (PNG or BMP)")->required();
  recognize->add_option("--templates", cfg.templates_manifest, "Template manifest (TSV)")
      ->required();
  recognize->add_option("--output", cfg.output_path, "Output text file")->required();
  recognize->add_option("--min-component", cfg.min_component_size,
                        "Objects with fewer pixels are removed")
      ->capture_default_str();
  recognize->add_option("--space-ratio", cfg.space_ratio,
                        "Word break at gaps >= ratio x widest gap in the line")
      ->capture_default_str();
  recognize->add_option("--connectivity", cfg.connectivity, "Object connectivity, 4 or 8")
      ->capture_default_str();
  recognize->add_option("--debug-dump", debug_dir, "Directory for per-glyph crops");
  recognize->add_option("--diagnostics", diagnostics, "Per-glyph JSON lines file");

  hwr::RenderSpec spec;
  std::string render_manifest;
  std::string render_output;
  auto* render = app.add_subcommand("render", "Render text with the templates as a font");
  render->add_option("--text", spec.text, "Text to render; \\n starts a new line")->required();
  render->add_option("--templates", render_manifest, "Template manifest (TSV)")->required();
  render->add_option("--output", render_output, "Output PNG")->required();
  render->add_option("--glyph-gap", spec.glyph_gap)->capture_default_str();
  render->add_option("--word-gap", spec.word_gap)->capture_default_str();
  render->add_option("--line-gap", spec.line_gap)->capture_default_str();
  render->add_option("--margin", spec.margin)->capture_default_str();

  std::string sample_dir;
  auto* sample = app.add_subcommand("sample-templates", "Write the built-in template set");
  sample->add_option("--output-dir", sample_dir, "Destination directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : hwr::kExitInvalidConfig;
  }

  if (*recognize) {
    if (!debug_dir.empty()) cfg.debug_dump = debug_dir;
    if (!diagnostics.empty()) cfg.diagnostics = diagnostics;
    return hwr::run_pipeline(cfg, std::cerr);
  }
  if (*render) {
    spec.text = unescape_newlines(spec.text);
    return run_render(spec, render_manifest, render_output);
  }
  try {
    std::cout << hwr::write_sample_templates(sample_dir).string() << '\n';
  } catch (const hwr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hwr::kExitIoError;
  }
  return hwr::kExitOk;
}
