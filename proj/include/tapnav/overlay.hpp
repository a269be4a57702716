// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tapnav/geometry.hpp"

namespace tapnav {

enum class Orientation { Landscape, Portrait };
enum class MarkerStyle { CutoutShapes, BrailleLetters, PlainBumps };
enum class RowAxisEdge { Left, Right };
enum class ColAxisEdge { Top, Bottom };
enum class RowNumbering { TopDown, BottomUp };
enum class Axis { Row, Column };
enum class MarkerShape { Circle, DoubleDiamond, Triangle, Square, Pentagon, QuadrantLine };

enum class BuiltinOverlay { DataVizCutout, InterfaceBraille };

/// Parametric model of a physical tactile overlay.
///
/// Row markers sit in a lane one pitch wide along `row_axis_edge`, column
/// markers in a lane along `col_axis_edge`. The cell grid (rows x cols bands
/// of `pitch_mm`) is adjacent to both lanes. `margin_mm` is the gap between
/// the screen edge and the outer edge of each lane.
struct OverlayConfig {
  std::string name;
  Orientation orientation = Orientation::Landscape;
  double screen_width_mm = 0.0;
  double screen_height_mm = 0.0;
  int rows = 0;
  int cols = 0;
  double pitch_mm = 0.0;
  double marker_size_mm = 0.0;
  MarkerStyle marker_style = MarkerStyle::PlainBumps;
  std::optional<int> quadrant_interval;
  RowAxisEdge row_axis_edge = RowAxisEdge::Left;
  ColAxisEdge col_axis_edge = ColAxisEdge::Bottom;
  RowNumbering row_numbering = RowNumbering::BottomUp;
  double margin_mm = 0.0;

  Rect screen() const { return {0.0, 0.0, screen_width_mm, screen_height_mm}; }

  friend bool operator==(const OverlayConfig&, const OverlayConfig&) = default;
};

struct Marker {
  Axis axis = Axis::Row;
  int index = 0;  // 1-based; 0 for quadrant-line pseudo-markers
  std::string label;
  Point center_mm;
  std::optional<MarkerShape> shape;

  bool is_quadrant_line() const { return shape == MarkerShape::QuadrantLine; }

  friend bool operator==(const Marker&, const Marker&) = default;
};

struct GridCell {
  int row = 0;
  int col = 0;

  friend bool operator==(const GridCell&, const GridCell&) = default;
};

/// Extra slop around a marker's nominal size that still counts as a hit.
inline constexpr double kMarkerTouchToleranceMm = 1.0;
/// Half-width of the hit zone of a quadrant divider line.
inline constexpr double kQuadrantLineHalfWidthMm = 0.5;

OverlayConfig builtin_overlay(BuiltinOverlay kind);
std::optional<BuiltinOverlay> builtin_overlay_from_name(std::string_view name);
std::string_view builtin_overlay_name(BuiltinOverlay kind);

/// Margin that centers the lane-plus-grid span on the tighter screen axis.
double centered_margin_mm(double width_mm, double height_mm, int rows, int cols, double pitch_mm);

/// Human-readable invariant violations; empty when the config is valid.
std::vector<std::string> overlay_violations(const OverlayConfig& overlay);

// Layout ---------------------------------------------------------------------

/// Rectangle covered by the rows x cols cell bands.
Rect grid_rect(const OverlayConfig& overlay);
/// Strip of the screen holding the row markers, limited to the grid's rows.
Rect row_axis_strip(const OverlayConfig& overlay);
/// Strip of the screen holding the column markers, limited to the grid's columns.
Rect col_axis_strip(const OverlayConfig& overlay);

double marker_hit_radius_mm(const OverlayConfig& overlay);

Point marker_center(Axis axis, int index, const OverlayConfig& overlay);
std::optional<MarkerShape> shape_for(Axis axis, int index, const OverlayConfig& overlay);
std::string label_for(Axis axis, int index, const OverlayConfig& overlay);
Marker make_marker(Axis axis, int index, const OverlayConfig& overlay);

/// Every real marker: rows 1..rows followed by columns 1..cols.
std::vector<Marker> all_markers(const OverlayConfig& overlay);
/// Quadrant divider pseudo-markers, one after every `quadrant_interval`
/// column markers (never after the last one).
std::vector<Marker> quadrant_lines(const OverlayConfig& overlay);

// Queries --------------------------------------------------------------------

std::optional<Marker> marker_at(Point p, const OverlayConfig& overlay);
GridCell cell_at(Point p, const OverlayConfig& overlay);
Rect band_extent(const Marker& marker, const OverlayConfig& overlay);

/// 1-based ordinal of the quadrant holding a row (or column) index, counted
/// from the origin side (bottom for rows, left for columns).
int quadrant_of(Axis axis, int index, const OverlayConfig& overlay);
int quadrant_count(Axis axis, const OverlayConfig& overlay);

std::string_view to_string(Axis axis);
std::string_view to_string(MarkerShape shape);

}  // namespace tapnav
