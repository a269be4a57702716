// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>

namespace tapnav {

/// Millimeter coordinates. Origin is the top-left corner of the screen,
/// x grows to the right and y grows downward.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Axis-aligned rectangle, [x0, x1] x [y0, y1] with x0 <= x1 and y0 <= y1.
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  Point center() const { return {(x0 + x1) / 2.0, (y0 + y1) / 2.0}; }

  // Closed containment; points on the border are inside.
  bool contains(Point p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
  // Half-open containment [x0, x1) x [y0, y1).
  bool contains_half_open(Point p) const { return p.x >= x0 && p.x < x1 && p.y >= y0 && p.y < y1; }
  bool contains(const Rect& r) const { return r.x0 >= x0 && r.x1 <= x1 && r.y0 >= y0 && r.y1 <= y1; }

  /// True when the intersection has strictly positive area.
  bool overlaps(const Rect& r) const {
    return std::min(x1, r.x1) > std::max(x0, r.x0) && std::min(y1, r.y1) > std::max(y0, r.y0);
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

}  // namespace tapnav
