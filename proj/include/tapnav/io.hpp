// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tapnav/engine.hpp"
#include "tapnav/gesture.hpp"
#include "tapnav/overlay.hpp"
#include "tapnav/scenario.hpp"

namespace tapnav {

// Every document is a JSON envelope {"format", "version", "payload"}, except
// transcripts, which are JSON lines with the envelope fields in the header line.

enum class Format { Overlay, Scenario, Trace, Transcript };

inline constexpr std::string_view kFormatVersion = "1.0.0";
inline constexpr int kFormatMajorVersion = 1;

struct Violation {
  enum class Kind { Syntax, Version, Schema, Invariant };

  Kind kind = Kind::Schema;
  std::string location;  // JSON path ($.payload.points[3].id), "line L, column C", or "line L"
  std::string message;

  /// One tab-separated diagnostic line: kind, location, message.
  std::string to_line() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// A document failed to parse or validate. Carries every violation found.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

std::string_view to_string(Format f);
std::string_view to_string(Violation::Kind k);

OverlayConfig parse_overlay(std::string_view doc);
Scenario parse_scenario(std::string_view doc);
std::vector<TouchEvent> parse_trace(std::string_view doc);
/// Plain JSON object of optional overrides on top of the defaults.
RecognizerConfig parse_recognizer_config(std::string_view doc);
Transcript read_transcript(std::string_view doc);

std::string serialize_overlay(const OverlayConfig& overlay);
std::string serialize_scenario(const Scenario& scenario);
std::string serialize_trace(std::span<const TouchEvent> events);
std::string serialize_recognizer_config(const RecognizerConfig& cfg);
/// Header line followed by one line per event; byte-stable.
std::string write_transcript(const Transcript& transcript);

using Document = std::variant<OverlayConfig, Scenario, std::vector<TouchEvent>, Transcript>;

/// Parses `doc` as `expected`, enforcing every declared invariant.
/// Throws FormatError listing located violations.
Document parse_and_validate(std::string_view doc, Format expected);

/// Rounds to the 0.01 mm serialization grid.
double quantize_mm(double v);

}  // namespace tapnav
