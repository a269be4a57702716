// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/assets.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "tapnav/io.hpp"

namespace tapnav {

namespace {

constexpr std::string_view kFilePrefix = "file:";

std::optional<std::string_view> forced_path(std::string_view ref) {
  if (ref.substr(0, kFilePrefix.size()) == kFilePrefix) return ref.substr(kFilePrefix.size());
  return std::nullopt;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, std::strerror(errno));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

Scenario load_scenario_ref(std::string_view ref) {
  const auto path = forced_path(ref);
  if (!path) {
    if (const auto fixture = fixture_from_name(ref)) return load_fixture(*fixture);
  }
  return parse_scenario(read_text_file(std::string(path.value_or(ref))));
}

OverlayConfig load_overlay_ref(std::string_view ref) {
  const auto path = forced_path(ref);
  if (!path) {
    if (const auto kind = builtin_overlay_from_name(ref)) return builtin_overlay(*kind);
  }
  return parse_overlay(read_text_file(std::string(path.value_or(ref))));
}

RecognizerConfig load_recognizer_config(const std::filesystem::path& path) {
  return parse_recognizer_config(read_text_file(path));
}

}  // namespace tapnav
