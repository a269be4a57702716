// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tapnav/overlay.hpp"
#include "tapnav/scenario.hpp"
#include "tapnav/spatial.hpp"

namespace tapnav {

// Speech templates. The text here is the spoken contract of the engine:
// golden transcripts depend on it, so any edit is a breaking change and must
// bump kPromptTemplateVersion.

inline constexpr std::string_view kPromptTemplateVersion = "1.0";

struct PromptTemplate {
  std::string_view id;
  std::string_view text;
};

std::span<const PromptTemplate> prompt_templates();

/// Substitutes `{name}` placeholders of template `id`.
std::string render_prompt(std::string_view id,
                          std::initializer_list<std::pair<std::string_view, std::string>> args);

/// At most two decimals, trailing zeros dropped: 8.5 -> "8.5", 10 -> "10".
std::string format_number(double v);
/// "zero" through "twenty", digits above.
std::string count_words(std::size_t n);

std::string marker_name(const Marker& m);
std::string element_text(const UIElement& e);
std::string point_detail(const DataPoint& dp, const ScatterPlot& plot);
std::string scatter_marker_summary(const Marker& m, const MarkerSummary& s, const ScatterPlot& plot);
std::string interface_marker_survey(const Marker& m, const MarkerSummary& s);
std::string selection_announcement(Axis axis, std::string_view label, std::size_t count);
std::string order_announcement(std::size_t position, std::size_t count, const UIElement& e);
std::string scale_text(const ScaleInfo& info);
std::string overview_text(const VisualizationOverview& overview);
std::string exploration_summary(const std::vector<DataPoint>& explored, const ScatterPlot& plot);
std::string spatial_mode_text(bool enabled);

}  // namespace tapnav
