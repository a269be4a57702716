// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/spatial.hpp"

#include <algorithm>
#include <tuple>

#include "tapnav/errors.hpp"

namespace tapnav {

const std::string& target_id(const Target& t) {
  return std::visit([](const auto& v) -> const std::string& { return v.id; }, t);
}

const std::string& target_label(const Target& t) {
  return std::visit([](const auto& v) -> const std::string& { return v.label; }, t);
}

void require_compatible(const Scenario& scenario, const OverlayConfig& overlay) {
  const OverlayConfig expected = builtin_overlay(scenario.overlay_kind);
  if (expected.orientation != overlay.orientation) {
    throw DomainError("scenario '" + scenario.name + "' targets " +
                      std::string(builtin_overlay_name(scenario.overlay_kind)) +
                      " but overlay '" + overlay.name + "' has a different orientation");
  }
  const Rect screen = overlay.screen();
  if (scenario.is_scatter()) {
    if (!screen.contains(scenario.scatter().plot_area_mm)) {
      throw DomainError("plot area of '" + scenario.name + "' does not fit overlay '" + overlay.name + "'");
    }
  } else {
    for (const UIElement& e : scenario.screen().elements) {
      if (!screen.contains(e.bounds_mm)) {
        throw DomainError("element '" + e.id + "' does not fit overlay '" + overlay.name + "'");
      }
    }
  }
}

LineOfSight line_of_sight(const Marker& marker, const Scenario& scenario, const OverlayConfig& overlay) {
  require_compatible(scenario, overlay);
  LineOfSight los{marker, {}, band_extent(marker, overlay)};
  if (scenario.is_scatter()) {
    for (DataPoint& dp : points_in(los.band, scenario.scatter(), overlay.row_numbering)) {
      los.targets.emplace_back(std::move(dp));
    }
  } else {
    for (UIElement& e : elements_in(los.band, scenario.screen())) los.targets.emplace_back(std::move(e));
  }
  return los;
}

MarkerSummary summarize_marker(const Marker& marker, const Scenario& scenario, const OverlayConfig& overlay) {
  const LineOfSight los = line_of_sight(marker, scenario, overlay);
  MarkerSummary s;
  s.marker_label = marker.label;
  s.count = los.targets.size();

  // Targets spread along the band; quadrants are counted across that direction.
  const Axis spread = marker.axis == Axis::Column ? Axis::Row : Axis::Column;
  std::vector<std::size_t> per_quadrant;
  if (overlay.quadrant_interval) per_quadrant.assign(static_cast<std::size_t>(quadrant_count(spread, overlay)), 0);

  for (const Target& t : los.targets) {
    Point pos;
    if (const auto* dp = std::get_if<DataPoint>(&t)) {
      const double v = marker.axis == Axis::Column ? dp->x : dp->y;
      s.min_value = s.min_value ? std::min(*s.min_value, v) : v;
      s.max_value = s.max_value ? std::max(*s.max_value, v) : v;
      pos = project_point(*dp, scenario.scatter(), overlay.row_numbering);
    } else {
      pos = std::get<UIElement>(t).bounds_mm.center();
    }
    if (!per_quadrant.empty()) {
      const GridCell cell = cell_at(pos, overlay);
      const int q = quadrant_of(spread, spread == Axis::Row ? cell.row : cell.col, overlay);
      ++per_quadrant[static_cast<std::size_t>(q - 1)];
    }
  }
  if (overlay.quadrant_interval) {
    s.quadrant_counts.emplace();
    for (std::size_t i = 0; i < per_quadrant.size(); ++i) {
      s.quadrant_counts->emplace_back(static_cast<int>(i + 1), per_quadrant[i]);
    }
  }
  if (!scenario.is_scatter() && !los.targets.empty()) s.first_target_label = target_label(los.targets.front());
  return s;
}

std::optional<Target> hit_target(Point p, const Scenario& scenario, const OverlayConfig& overlay) {
  if (scenario.is_scatter()) {
    const ScatterPlot& plot = scenario.scatter();
    const DataPoint* best = nullptr;
    double best_d = 0.0;
    for (const DataPoint& dp : plot.points) {
      const double d = distance(p, project_point(dp, plot, overlay.row_numbering));
      if (d > kPointHitRadiusMm) continue;
      if (!best || std::tie(d, dp.id) < std::tie(best_d, best->id)) {
        best = &dp;
        best_d = d;
      }
    }
    if (!best) return std::nullopt;
    return Target{*best};
  }
  const UIElement* best = nullptr;
  for (const UIElement& e : scenario.screen().elements) {
    if (!e.bounds_mm.contains(p)) continue;
    if (!best || e.bounds_mm.area() < best->bounds_mm.area() ||
        (e.bounds_mm.area() == best->bounds_mm.area() && e.reading_index > best->reading_index)) {
      best = &e;
    }
  }
  if (!best) return std::nullopt;
  return Target{*best};
}

ScaleInfo scale_info(PlotAxis axis, const ScatterPlot& plot) {
  const AxisSpec& a = axis == PlotAxis::X ? plot.x_axis : plot.y_axis;
  return ScaleInfo{axis, a.label, a.min, a.max, a.step, a.unit};
}

ScaleInfo scale_info(PlotAxis axis, const Scenario& scenario) {
  if (!scenario.is_scatter()) throw DomainError("scale information requires a scatterplot scenario");
  return scale_info(axis, scenario.scatter());
}

VisualizationOverview visualization_overview(const ScatterPlot& plot) {
  return VisualizationOverview{plot.title, plot.item_noun, plot.points.size(), scale_info(PlotAxis::X, plot),
                               scale_info(PlotAxis::Y, plot)};
}

VisualizationOverview visualization_overview(const Scenario& scenario) {
  if (!scenario.is_scatter()) throw DomainError("an overview requires a scatterplot scenario");
  return visualization_overview(scenario.scatter());
}

}  // namespace tapnav
