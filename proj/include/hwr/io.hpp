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

// PNG/BMP decoding and encoding, delegated to OpenCV's imgcodecs.

#include <cctype>
#include <filesystem>
#include <string>
#include <variant>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "hwr/error.hpp"
#include "hwr/image.hpp"
#include "hwr/imaging.hpp"

namespace hwr {

/// Decoded pixels: single-channel files stay gray, color files stay RGB
/// (alpha is dropped).
using DecodedImage = std::variant<GrayImage, RgbImage>;

inline bool is_supported_image_path(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return ext == ".png" || ext == ".bmp";
}

inline DecodedImage decode_image(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw Error(ErrorCode::IoError, "cannot read " + path.string());
  }
  if (!is_supported_image_path(path)) {
    throw Error(ErrorCode::UndecodableImage, "only PNG and BMP are accepted: " + path.string());
  }
  const cv::Mat mat = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  if (mat.empty()) throw Error(ErrorCode::UndecodableImage, "cannot decode " + path.string());
  if (mat.depth() != CV_8U) {
    throw Error(ErrorCode::UndecodableImage, "not an 8-bit image: " + path.string());
  }

  const int channels = mat.channels();
  if (channels == 1) {
    GrayImage gray(mat.cols, mat.rows);
    for (int r = 0; r < mat.rows; ++r) {
      const auto* src = mat.ptr<std::uint8_t>(r);
      for (int c = 0; c < mat.cols; ++c) gray(r, c) = src[c];
    }
    return gray;
  }
  if (channels != 3 && channels != 4) {
    throw Error(ErrorCode::UndecodableImage, "unsupported channel count in " + path.string());
  }
  RgbImage rgb(mat.cols, mat.rows);
  for (int r = 0; r < mat.rows; ++r) {
    const auto* src = mat.ptr<std::uint8_t>(r);
    for (int c = 0; c < mat.cols; ++c) {
      const auto* px = src + static_cast<std::ptrdiff_t>(c) * channels;  // BGR(A)
      rgb(r, c) = Rgb{px[2], px[1], px[0]};
    }
  }
  return rgb;
}

inline GrayImage load_grayscale(const std::filesystem::path& path) {
  DecodedImage decoded = decode_image(path);
  if (auto* gray = std::get_if<GrayImage>(&decoded)) return std::move(*gray);
  return to_grayscale(std::get<RgbImage>(decoded));
}

inline void write_gray(const std::filesystem::path& path, const GrayImage& img) {
  if (img.empty()) throw Error(ErrorCode::EmptyImage, "cannot encode a zero-sized image");
  cv::Mat mat(img.height(), img.width(), CV_8UC1);
  for (int r = 0; r < img.height(); ++r) {
    auto* dst = mat.ptr<std::uint8_t>(r);
    for (int c = 0; c < img.width(); ++c) dst[c] = img(r, c);
  }
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), mat);
  } catch (const cv::Exception& e) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string() + ": " + e.what());
  }
  if (!ok) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

/// Black ink on white paper.
inline GrayImage to_printable(const BinaryImage& img) {
  GrayImage out(img.width(), img.height());
  auto src = img.pixels();
  auto dst = out.pixels();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? 0 : 255;
  return out;
}

inline void write_binary(const std::filesystem::path& path, const BinaryImage& img) {
  write_gray(path, to_printable(img));
}

}  // namespace hwr
