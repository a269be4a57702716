// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tapnav/overlay.hpp"
#include "tapnav/scenario.hpp"

namespace tapnav {

using Target = std::variant<DataPoint, UIElement>;

const std::string& target_id(const Target& t);
const std::string& target_label(const Target& t);

struct LineOfSight {
  Marker marker;
  std::vector<Target> targets;
  Rect band;
};

struct MarkerSummary {
  std::string marker_label;
  std::size_t count = 0;
  std::optional<double> min_value;
  std::optional<double> max_value;
  std::optional<std::vector<std::pair<int, std::size_t>>> quadrant_counts;
  std::optional<std::string> first_target_label;
};

enum class PlotAxis { X, Y };

struct ScaleInfo {
  PlotAxis axis = PlotAxis::X;
  std::string label;
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;
  std::optional<std::string> unit;
};

struct VisualizationOverview {
  std::string title;
  std::string item_noun;
  std::size_t total = 0;
  ScaleInfo x;
  ScaleInfo y;
};

/// Data-point hover radius.
inline constexpr double kPointHitRadiusMm = 3.5;

/// Throws DomainError unless the scenario was authored for an overlay of the
/// same orientation and its content fits on the overlay's screen.
void require_compatible(const Scenario& scenario, const OverlayConfig& overlay);

LineOfSight line_of_sight(const Marker& marker, const Scenario& scenario, const OverlayConfig& overlay);

/// Count and spread of the targets in a marker's line of sight. For plots,
/// min/max are the values along the axis the marker indexes (x for column
/// markers, y for row markers).
MarkerSummary summarize_marker(const Marker& marker, const Scenario& scenario, const OverlayConfig& overlay);

std::optional<Target> hit_target(Point p, const Scenario& scenario, const OverlayConfig& overlay);

ScaleInfo scale_info(PlotAxis axis, const ScatterPlot& plot);
ScaleInfo scale_info(PlotAxis axis, const Scenario& scenario);
VisualizationOverview visualization_overview(const ScatterPlot& plot);
VisualizationOverview visualization_overview(const Scenario& scenario);

}  // namespace tapnav
