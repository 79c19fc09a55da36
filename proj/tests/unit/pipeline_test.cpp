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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "corpus.hpp"
#include "hwr/io.hpp"
#include "hwr/pipeline.hpp"
#include "hwr/render.hpp"
#include "hwr/sample_font.hpp"

namespace hwr {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hwr_pipeline_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    manifest_ = write_sample_templates(dir_ / "templates");
  }
  void TearDown() override { fs::remove_all(dir_); }

  PipelineConfig config_for(const fs::path& input) const {
    PipelineConfig cfg;
    cfg.input_path = input;
    cfg.templates_manifest = manifest_;
    cfg.output_path = dir_ / "out.txt";
    return cfg;
  }

  fs::path dir_;
  fs::path manifest_;
  TemplateStore store_ = sample_store();
};

TEST_F(PipelineTest, RenderTwoGlyphs) {
  RenderSpec spec;
  spec.text = "ab";
  const BinaryImage page = render_page(spec, store_);
  EXPECT_EQ(page.width(), 24 + spec.glyph_gap + 24 + 2 * spec.margin);
  EXPECT_EQ(page.height(), 42 + 2 * spec.margin);
  EXPECT_EQ(crop(page, spec.margin, spec.margin, 42, 24), store_.at('a'));
  EXPECT_EQ(crop(page, spec.margin, spec.margin + 24 + spec.glyph_gap, 42, 24), store_.at('b'));
  EXPECT_EQ(count_foreground(page),
            count_foreground(store_.at('a')) + count_foreground(store_.at('b')));
}

TEST_F(PipelineTest, RenderWordGapClearsThreshold) {
  RenderSpec spec;
  spec.text = "a b";
  const BinaryImage page = render_page(spec, store_);
  const auto lines = split_lines(page);
  ASSERT_EQ(lines.size(), 1u);
  const auto glyphs = split_glyphs(lines[0]);
  ASSERT_EQ(glyphs.size(), 2u);
  EXPECT_EQ(glyphs[1].space_before, spec.word_gap);
  EXPECT_GE(spec.word_gap * kDefaultSpaceRatio, spec.glyph_gap);
}

TEST_F(PipelineTest, RenderEmptyTextIsMarginOnly) {
  RenderSpec spec;
  const BinaryImage page = render_page(spec, store_);
  EXPECT_EQ(page.width(), 2 * spec.margin);
  EXPECT_EQ(page.height(), 2 * spec.margin);
  EXPECT_EQ(count_foreground(page), 0u);
}

TEST_F(PipelineTest, RenderRejectsBadSpecs) {
  RenderSpec spec;
  spec.text = "a-b";
  try {
    (void)render_page(spec, store_);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnrenderableCharacter);
  }
  spec.text = "ab";
  spec.word_gap = 3;
  EXPECT_THROW((void)render_page(spec, store_), Error);
  spec.word_gap = 12;
  spec.line_gap = 0;
  EXPECT_THROW((void)render_page(spec, store_), Error);
}

TEST_F(PipelineTest, RenderIsDeterministic) {
  RenderSpec spec;
  spec.text = "Det 3rm\nin1stic";
  EXPECT_EQ(render_page(spec, store_), render_page(spec, store_));
}

TEST_F(PipelineTest, RoundTripHi42) {
  RenderSpec spec;
  spec.text = "HI 42";
  write_binary(dir_ / "page.png", render_page(spec, store_));
  std::ostringstream log;
  EXPECT_EQ(run_pipeline(config_for(dir_ / "page.png"), log), kExitOk) << log.str();
  EXPECT_EQ(slurp(dir_ / "out.txt"), "HI 42\n");
}

TEST_F(PipelineTest, InMemoryRoundTripOverMultipleLines) {
  RenderSpec spec;
  spec.text = "The quick 8rown\nfox jumps 0ver\nlazy D0GS";
  EXPECT_EQ(recognize_ink(render_page(spec, store_), store_).text, spec.text + "\n");
}

TEST_F(PipelineTest, RgbAndBmpInputs) {
  RenderSpec spec;
  spec.text = "Rgb in";
  const BinaryImage page = render_page(spec, store_);
  cv::Mat color(page.height(), page.width(), CV_8UC3);
  for (int r = 0; r < page.height(); ++r) {
    for (int c = 0; c < page.width(); ++c) {
      color.at<cv::Vec3b>(r, c) = page(r, c) ? cv::Vec3b(90, 20, 10) : cv::Vec3b(230, 240, 250);
    }
  }
  ASSERT_TRUE(cv::imwrite((dir_ / "page.bmp").string(), color));
  std::ostringstream log;
  EXPECT_EQ(run_pipeline(config_for(dir_ / "page.bmp"), log), kExitOk) << log.str();
  EXPECT_EQ(slurp(dir_ / "out.txt"), "Rgb in\n");
}

TEST_F(PipelineTest, BlankPageGivesEmptyFile) {
  write_gray(dir_ / "blank.png", GrayImage(120, 80, 255));
  std::ostringstream log;
  EXPECT_EQ(run_pipeline(config_for(dir_ / "blank.png"), log), kExitOk);
  ASSERT_TRUE(fs::exists(dir_ / "out.txt"));
  EXPECT_EQ(slurp(dir_ / "out.txt"), "");
}

TEST_F(PipelineTest, SpecklesOnlyPageGivesEmptyFile) {
  GrayImage page(60, 60, 255);
  page(10, 10) = 0;
  page(40, 30) = 0;
  write_gray(dir_ / "specks.png", page);
  std::ostringstream log;
  EXPECT_EQ(run_pipeline(config_for(dir_ / "specks.png"), log), kExitOk);
  EXPECT_EQ(slurp(dir_ / "out.txt"), "");
}

TEST_F(PipelineTest, DarkConstantPageIsDegenerate) {
  write_gray(dir_ / "dark.png", GrayImage(50, 50, 10));
  std::ostringstream log;
  EXPECT_EQ(run_pipeline(config_for(dir_ / "dark.png"), log), kExitDegenerateImage);
  EXPECT_NE(log.str().find("ConstantImage"), std::string::npos);
  EXPECT_EQ(slurp(dir_ / "out.txt"), "");
}

TEST_F(PipelineTest, ManifestMissingLabelExitsWithConfigError) {
  std::ofstream(dir_ / "partial.tsv") << "A\ttemplates/upper_A.png\n";
  write_gray(dir_ / "blank.png", GrayImage(20, 20, 255));
  PipelineConfig cfg = config_for(dir_ / "blank.png");
  cfg.templates_manifest = dir_ / "partial.tsv";
  std::ostringstream log;
  EXPECT_EQ(run_pipeline(cfg, log), kExitInvalidConfig);
  EXPECT_NE(log.str().find("MissingLabel"), std::string::npos);

  cfg.templates_manifest = dir_ / "nowhere.tsv";
  EXPECT_EQ(run_pipeline(cfg, log), kExitInvalidConfig);
}

TEST_F(PipelineTest, IoAndConfigErrors) {
  std::ostringstream log;
  EXPECT_EQ(run_pipeline(config_for(dir_ / "missing.png"), log), kExitIoError);

  std::ofstream(dir_ / "garbage.png") << "garbage";
  EXPECT_EQ(run_pipeline(config_for(dir_ / "garbage.png"), log), kExitIoError);

  write_gray(dir_ / "blank.png", GrayImage(20, 20, 255));
  PipelineConfig cfg = config_for(dir_ / "blank.png");
  cfg.output_path = dir_ / "no" / "such" / "dir" / "out.txt";
  EXPECT_EQ(run_pipeline(cfg, log), kExitIoError);

  cfg = config_for(dir_ / "blank.png");
  cfg.space_ratio = 0.0;
  EXPECT_EQ(run_pipeline(cfg, log), kExitInvalidConfig);
  cfg.space_ratio = 1.5;
  EXPECT_EQ(run_pipeline(cfg, log), kExitInvalidConfig);
  cfg.space_ratio = 0.75;
  cfg.connectivity = 6;
  EXPECT_EQ(run_pipeline(cfg, log), kExitInvalidConfig);
}

TEST_F(PipelineTest, DiagnosticsAndDebugDump) {
  RenderSpec spec;
  spec.text = "ao ab\nz";
  write_binary(dir_ / "page.png", render_page(spec, store_));
  PipelineConfig cfg = config_for(dir_ / "page.png");
  cfg.diagnostics = dir_ / "diag.jsonl";
  cfg.debug_dump = dir_ / "dump";
  std::ostringstream log;
  ASSERT_EQ(run_pipeline(cfg, log), kExitOk) << log.str();

  std::istringstream diag(slurp(dir_ / "diag.jsonl"));
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(diag, line)) records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 5u);
  EXPECT_EQ(records[1]["line"], 0);
  EXPECT_EQ(records[1]["glyph"], 1);
  EXPECT_EQ(records[1]["label"], "o");
  EXPECT_DOUBLE_EQ(records[1]["score"].get<double>(), 1.0);
  EXPECT_EQ(records[1]["runners_up"].size(), 3u);
  EXPECT_EQ(records[4]["line"], 1);

  const std::string sidecar = slurp(cfg.debug_dump.value() / "glyphs.tsv");
  EXPECT_NE(sidecar.find("0\t2\t" + std::to_string(48 + 3 + 12) + "\t12\n"), std::string::npos);
  EXPECT_TRUE(fs::exists(cfg.debug_dump.value() / "line001_glyph000.png"));
  EXPECT_EQ(load_grayscale(cfg.debug_dump.value() / "line001_glyph000.png"),
            to_printable(store_.at('z')));
}

TEST_F(PipelineTest, RunsAreByteIdentical) {
  RenderSpec spec;
  spec.text = "same 1nput\ntwice";
  write_binary(dir_ / "page.png", render_page(spec, store_));
  std::ostringstream log;
  PipelineConfig a = config_for(dir_ / "page.png");
  PipelineConfig b = a;
  b.output_path = dir_ / "out2.txt";
  ASSERT_EQ(run_pipeline(a, log), kExitOk);
  ASSERT_EQ(run_pipeline(b, log), kExitOk);
  EXPECT_EQ(slurp(a.output_path), slurp(b.output_path));
}

TEST_F(PipelineTest, FourConnectivityOption) {
  RenderSpec spec;
  spec.text = "four conn";
  write_binary(dir_ / "page.png", render_page(spec, store_));
  PipelineConfig cfg = config_for(dir_ / "page.png");
  cfg.connectivity = 4;
  std::ostringstream log;
  ASSERT_EQ(run_pipeline(cfg, log), kExitOk) << log.str();
  EXPECT_EQ(slurp(cfg.output_path), "four conn\n");
}

#ifdef HWR_CLI_PATH
TEST_F(PipelineTest, CommandLineRenderThenRecognize) {
  const std::string cli = HWR_CLI_PATH;
  const auto page = dir_ / "cli.png";
  const auto out = dir_ / "cli.txt";
  const std::string render = cli + " render --text 'Cli 0K\\nline 2' --templates " +
                             manifest_.string() + " --output " + page.string();
  ASSERT_EQ(std::system(render.c_str()), 0);
  const std::string recognize = cli + " recognize --input " + page.string() + " --templates " +
                                manifest_.string() + " --output " + out.string() +
                                " --space-ratio 0.75 --min-component 15 --connectivity 8";
  ASSERT_EQ(std::system(recognize.c_str()), 0);
  EXPECT_EQ(slurp(out), "Cli 0K\nline 2\n");

  const std::string bad = cli + " recognize --input " + page.string() + " --templates " +
                          (dir_ / "nope.tsv").string() + " --output " + out.string() +
                          " 2>/dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), kExitInvalidConfig);
}
#endif

}  // namespace
}  // namespace hwr
