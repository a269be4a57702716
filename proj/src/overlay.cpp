// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/overlay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <tuple>

#include "tapnav/errors.hpp"

namespace tapnav {

namespace {

constexpr std::array<MarkerShape, 5> kShapeCycle = {
    MarkerShape::Circle, MarkerShape::DoubleDiamond, MarkerShape::Triangle, MarkerShape::Square,
    MarkerShape::Pentagon};

struct Layout {
  double gx0, gx1, gy0, gy1;        // cell grid
  double row_lane_x0, row_lane_x1;  // lane holding the row markers
  double col_lane_y0, col_lane_y1;  // lane holding the column markers
};

Layout layout_of(const OverlayConfig& o) {
  const double p = o.pitch_mm;
  const double m = o.margin_mm;
  Layout l{};
  if (o.row_axis_edge == RowAxisEdge::Left) {
    l.row_lane_x0 = m;
    l.gx0 = m + p;
  } else {
    l.row_lane_x0 = o.screen_width_mm - m - p;
    l.gx0 = l.row_lane_x0 - o.cols * p;
  }
  l.row_lane_x1 = l.row_lane_x0 + p;
  l.gx1 = l.gx0 + o.cols * p;

  if (o.col_axis_edge == ColAxisEdge::Top) {
    l.col_lane_y0 = m;
    l.gy0 = m + p;
  } else {
    l.col_lane_y0 = o.screen_height_mm - m - p;
    l.gy0 = l.col_lane_y0 - o.rows * p;
  }
  l.col_lane_y1 = l.col_lane_y0 + p;
  l.gy1 = l.gy0 + o.rows * p;
  return l;
}

// Physical band position counted from the top for a row index.
int row_band_from_top(int row, const OverlayConfig& o) {
  return o.row_numbering == RowNumbering::TopDown ? row : o.rows + 1 - row;
}

// Locates the band holding `v` among `count` bands starting at `origin`,
// clamped to the outermost bands. Bands are half-open [lo, hi).
int band_index(double v, double origin, double pitch, int count) {
  int k = static_cast<int>(std::floor((v - origin) / pitch)) + 1;
  k = std::clamp(k, 1, count);
  while (k > 1 && v < origin + (k - 1) * pitch) --k;
  while (k < count && v >= origin + k * pitch) ++k;
  return k;
}

void require_on_screen(Point p, const OverlayConfig& o) {
  if (!(p.x >= 0.0 && p.x <= o.screen_width_mm && p.y >= 0.0 && p.y <= o.screen_height_mm)) {
    throw DomainError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                      ") mm is outside the " + o.name + " screen");
  }
}

void require_index(Axis axis, int index, const OverlayConfig& o) {
  const int limit = axis == Axis::Row ? o.rows : o.cols;
  if (index < 1 || index > limit) {
    throw DomainError(std::string(to_string(axis)) + " index " + std::to_string(index) +
                      " outside 1.." + std::to_string(limit));
  }
}

double chebyshev(Point a, Point b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

}  // namespace

double centered_margin_mm(double width_mm, double height_mm, int rows, int cols, double pitch_mm) {
  const double spare_x = width_mm - (cols + 1) * pitch_mm;
  const double spare_y = height_mm - (rows + 1) * pitch_mm;
  return std::max(0.0, std::min(spare_x, spare_y) / 2.0);
}

OverlayConfig builtin_overlay(BuiltinOverlay kind) {
  OverlayConfig o;
  switch (kind) {
    case BuiltinOverlay::DataVizCutout:
      o.name = "DataVizCutout";
      o.orientation = Orientation::Landscape;
      o.screen_width_mm = 267.0;
      o.screen_height_mm = 167.0;
      o.rows = 14;
      o.cols = 25;
      o.pitch_mm = 10.0;
      o.marker_size_mm = 7.5;
      o.marker_style = MarkerStyle::CutoutShapes;
      o.quadrant_interval = 5;
      o.row_axis_edge = RowAxisEdge::Left;
      o.col_axis_edge = ColAxisEdge::Bottom;
      o.row_numbering = RowNumbering::BottomUp;
      break;
    case BuiltinOverlay::InterfaceBraille:
      o.name = "InterfaceBraille";
      o.orientation = Orientation::Portrait;
      o.screen_width_mm = 167.0;
      o.screen_height_mm = 267.0;
      o.rows = 21;
      o.cols = 14;
      o.pitch_mm = 10.0;
      o.marker_size_mm = 6.12;
      o.marker_style = MarkerStyle::BrailleLetters;
      o.quadrant_interval.reset();
      o.row_axis_edge = RowAxisEdge::Left;
      o.col_axis_edge = ColAxisEdge::Top;
      o.row_numbering = RowNumbering::TopDown;
      break;
  }
  o.margin_mm = centered_margin_mm(o.screen_width_mm, o.screen_height_mm, o.rows, o.cols, o.pitch_mm);
  return o;
}

std::optional<BuiltinOverlay> builtin_overlay_from_name(std::string_view name) {
  if (name == "DataVizCutout") return BuiltinOverlay::DataVizCutout;
  if (name == "InterfaceBraille") return BuiltinOverlay::InterfaceBraille;
  return std::nullopt;
}

std::string_view builtin_overlay_name(BuiltinOverlay kind) {
  return kind == BuiltinOverlay::DataVizCutout ? "DataVizCutout" : "InterfaceBraille";
}

std::vector<std::string> overlay_violations(const OverlayConfig& o) {
  std::vector<std::string> v;
  auto positive = [&](double value, const char* field) {
    if (!(std::isfinite(value) && value > 0.0)) v.push_back(std::string(field) + " must be positive");
  };
  if (o.name.empty()) v.emplace_back("name must not be empty");
  positive(o.screen_width_mm, "screen_width_mm");
  positive(o.screen_height_mm, "screen_height_mm");
  positive(o.pitch_mm, "pitch_mm");
  positive(o.marker_size_mm, "marker_size_mm");
  if (o.rows < 1) v.emplace_back("rows must be a positive integer");
  if (o.cols < 1) v.emplace_back("cols must be a positive integer");
  if (!(std::isfinite(o.margin_mm) && o.margin_mm >= 0.0)) v.emplace_back("margin_mm must be non-negative");
  if (o.quadrant_interval && *o.quadrant_interval < 1) v.emplace_back("quadrant_interval must be positive");
  if (!v.empty()) return v;

  if ((o.cols + 1) * o.pitch_mm + 2 * o.margin_mm > o.screen_width_mm + 1e-9) {
    v.emplace_back("row lane plus " + std::to_string(o.cols) + " columns do not fit the screen width");
  }
  if ((o.rows + 1) * o.pitch_mm + 2 * o.margin_mm > o.screen_height_mm + 1e-9) {
    v.emplace_back("column lane plus " + std::to_string(o.rows) + " rows do not fit the screen height");
  }
  if (o.marker_size_mm >= o.pitch_mm) v.emplace_back("marker_size_mm must be smaller than pitch_mm");
  if (o.marker_style == MarkerStyle::BrailleLetters && (o.rows > 26 || o.cols > 26)) {
    v.emplace_back("Braille letter labels allow at most 26 rows and 26 columns");
  }
  if (o.orientation == Orientation::Landscape && o.screen_width_mm < o.screen_height_mm) {
    v.emplace_back("landscape overlay must be at least as wide as it is tall");
  }
  if (o.orientation == Orientation::Portrait && o.screen_height_mm < o.screen_width_mm) {
    v.emplace_back("portrait overlay must be at least as tall as it is wide");
  }
  return v;
}

Rect grid_rect(const OverlayConfig& o) {
  const Layout l = layout_of(o);
  return {l.gx0, l.gy0, l.gx1, l.gy1};
}

Rect row_axis_strip(const OverlayConfig& o) {
  const Layout l = layout_of(o);
  return {l.row_lane_x0, l.gy0, l.row_lane_x1, l.gy1};
}

Rect col_axis_strip(const OverlayConfig& o) {
  const Layout l = layout_of(o);
  return {l.gx0, l.col_lane_y0, l.gx1, l.col_lane_y1};
}

double marker_hit_radius_mm(const OverlayConfig& o) {
  return o.marker_size_mm / 2.0 + kMarkerTouchToleranceMm;
}

Point marker_center(Axis axis, int index, const OverlayConfig& o) {
  require_index(axis, index, o);
  const Layout l = layout_of(o);
  const double p = o.pitch_mm;
  if (axis == Axis::Row) {
    const int k = row_band_from_top(index, o);
    return {(l.row_lane_x0 + l.row_lane_x1) / 2.0, l.gy0 + (k - 0.5) * p};
  }
  return {l.gx0 + (index - 0.5) * p, (l.col_lane_y0 + l.col_lane_y1) / 2.0};
}

std::optional<MarkerShape> shape_for(Axis axis, int index, const OverlayConfig& o) {
  require_index(axis, index, o);
  if (o.marker_style != MarkerStyle::CutoutShapes) return std::nullopt;
  return kShapeCycle[static_cast<std::size_t>(index - 1) % kShapeCycle.size()];
}

std::string label_for(Axis axis, int index, const OverlayConfig& o) {
  require_index(axis, index, o);
  switch (o.marker_style) {
    case MarkerStyle::BrailleLetters:
      return std::string(1, static_cast<char>('a' + index - 1));
    case MarkerStyle::CutoutShapes:
      return "marker " + std::to_string(index);
    case MarkerStyle::PlainBumps:
      break;
  }
  return std::to_string(index);
}

Marker make_marker(Axis axis, int index, const OverlayConfig& o) {
  return Marker{axis, index, label_for(axis, index, o), marker_center(axis, index, o),
                shape_for(axis, index, o)};
}

std::vector<Marker> all_markers(const OverlayConfig& o) {
  std::vector<Marker> out;
  out.reserve(static_cast<std::size_t>(o.rows + o.cols));
  for (int i = 1; i <= o.rows; ++i) out.push_back(make_marker(Axis::Row, i, o));
  for (int j = 1; j <= o.cols; ++j) out.push_back(make_marker(Axis::Column, j, o));
  return out;
}

std::vector<Marker> quadrant_lines(const OverlayConfig& o) {
  std::vector<Marker> out;
  if (!o.quadrant_interval) return out;
  const Layout l = layout_of(o);
  const int step = *o.quadrant_interval;
  for (int after = step; after < o.cols; after += step) {
    out.push_back(Marker{Axis::Column, 0, "quadrant line after " + label_for(Axis::Column, after, o),
                         Point{l.gx0 + after * o.pitch_mm, (l.col_lane_y0 + l.col_lane_y1) / 2.0},
                         MarkerShape::QuadrantLine});
  }
  return out;
}

std::optional<Marker> marker_at(Point p, const OverlayConfig& o) {
  require_on_screen(p, o);
  const Layout l = layout_of(o);
  const double r = marker_hit_radius_mm(o);

  using Key = std::tuple<double, int, int>;  // distance, index, axis
  std::optional<Key> best;
  std::optional<Marker> hit;
  auto consider = [&](Axis axis, int index) {
    const Point c = marker_center(axis, index, o);
    const double d = chebyshev(p, c);
    if (d > r) return;
    const Key key{d, index, axis == Axis::Row ? 0 : 1};
    if (!best || key < *best) {
      best = key;
      hit = make_marker(axis, index, o);
    }
  };

  const int k = band_index(p.y, l.gy0, o.pitch_mm, o.rows);
  for (int dk = -2; dk <= 2; ++dk) {
    const int kk = k + dk;
    if (kk < 1 || kk > o.rows) continue;
    consider(Axis::Row, row_band_from_top(kk, o));
  }
  const int j = band_index(p.x, l.gx0, o.pitch_mm, o.cols);
  for (int dj = -2; dj <= 2; ++dj) {
    const int jj = j + dj;
    if (jj >= 1 && jj <= o.cols) consider(Axis::Column, jj);
  }
  if (hit) return hit;

  for (const Marker& line : quadrant_lines(o)) {
    if (std::abs(p.x - line.center_mm.x) <= kQuadrantLineHalfWidthMm &&
        std::abs(p.y - line.center_mm.y) <= r) {
      return line;
    }
  }
  return std::nullopt;
}

GridCell cell_at(Point p, const OverlayConfig& o) {
  require_on_screen(p, o);
  const Layout l = layout_of(o);
  const int from_top = band_index(p.y, l.gy0, o.pitch_mm, o.rows);
  const int col = band_index(p.x, l.gx0, o.pitch_mm, o.cols);
  return {row_band_from_top(from_top, o), col};
}

Rect band_extent(const Marker& m, const OverlayConfig& o) {
  if (m.is_quadrant_line()) throw DomainError("quadrant lines have no line of sight");
  const Point c = marker_center(m.axis, m.index, o);
  const double half = o.pitch_mm / 2.0;
  if (m.axis == Axis::Row) return {0.0, c.y - half, o.screen_width_mm, c.y + half};
  return {c.x - half, 0.0, c.x + half, o.screen_height_mm};
}

int quadrant_count(Axis axis, const OverlayConfig& o) {
  if (!o.quadrant_interval) throw DomainError(o.name + " has no quadrant lines");
  const int n = axis == Axis::Row ? o.rows : o.cols;
  return (n + *o.quadrant_interval - 1) / *o.quadrant_interval;
}

int quadrant_of(Axis axis, int index, const OverlayConfig& o) {
  require_index(axis, index, o);
  if (!o.quadrant_interval) throw DomainError(o.name + " has no quadrant lines");
  int from_origin = index;
  if (axis == Axis::Row && o.row_numbering == RowNumbering::TopDown) from_origin = o.rows + 1 - index;
  return (from_origin - 1) / *o.quadrant_interval + 1;
}

std::string_view to_string(Axis axis) { return axis == Axis::Row ? "row" : "column"; }

std::string_view to_string(MarkerShape shape) {
  switch (shape) {
    case MarkerShape::Circle: return "circle";
    case MarkerShape::DoubleDiamond: return "double diamond";
    case MarkerShape::Triangle: return "triangle";
    case MarkerShape::Square: return "square";
    case MarkerShape::Pentagon: return "pentagon";
    case MarkerShape::QuadrantLine: return "quadrant line";
  }
  return "unknown";
}

}  // namespace tapnav
