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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hwr {

enum class ErrorCode {
  EmptyImage,
  ConstantImage,
  NothingToClip,
  EmptyGlyph,
  DimensionMismatch,
  MissingLabel,
  DuplicateLabel,
  InvalidManifest,
  UndecodableImage,
  BlankTemplate,
  UnrenderableCharacter,
  InvalidConfig,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::ConstantImage: return "ConstantImage";
    case ErrorCode::NothingToClip: return "NothingToClip";
    case ErrorCode::EmptyGlyph: return "EmptyGlyph";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::InvalidManifest: return "InvalidManifest";
    case ErrorCode::UndecodableImage: return "UndecodableImage";
    case ErrorCode::BlankTemplate: return "BlankTemplate";
    case ErrorCode::UnrenderableCharacter: return "UnrenderableCharacter";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; the
// code lets callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hwr
