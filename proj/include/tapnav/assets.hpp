// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tapnav/gesture.hpp"
#include "tapnav/overlay.hpp"
#include "tapnav/scenario.hpp"

namespace tapnav {

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  IoError(std::filesystem::path path, const std::string& what)
      : std::runtime_error(path.string() + ": " + what), path_(std::move(path)) {}
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Asset references name a builtin ("MoviesScatter", "DataVizCutout") or a
// file path. Builtin names win; a "file:" prefix forces a path.

Scenario load_scenario_ref(std::string_view ref);
OverlayConfig load_overlay_ref(std::string_view ref);
RecognizerConfig load_recognizer_config(const std::filesystem::path& path);

}  // namespace tapnav
