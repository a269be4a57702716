// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "tapnav/braille.hpp"
#include "tapnav/errors.hpp"

namespace tapnav {

namespace {

std::string mm(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string polygon_path(const std::vector<Point>& pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 ? "M" : " L") + mm(pts[i].x) + " " + mm(pts[i].y);
  }
  return d + " Z";
}

// Regular polygon with one vertex straight up; the vertex mean is the center.
std::vector<Point> regular_polygon(Point c, double radius, int sides) {
  std::vector<Point> pts;
  for (int k = 0; k < sides; ++k) {
    const double a = -std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / sides;
    pts.push_back({c.x + radius * std::cos(a), c.y + radius * std::sin(a)});
  }
  return pts;
}

std::vector<Point> diamond(Point c, double half_w, double half_h) {
  return {{c.x, c.y - half_h}, {c.x + half_w, c.y}, {c.x, c.y + half_h}, {c.x - half_w, c.y}};
}

std::string marker_attrs(const Marker& m) {
  return " data-axis=\"" + std::string(to_string(m.axis)) + "\" data-index=\"" + std::to_string(m.index) + "\"";
}

void cut_marker(const Marker& m, double size, std::string& out) {
  const Point c = m.center_mm;
  const double r = size / 2.0;
  out += "    <g class=\"marker\"" + marker_attrs(m) + " data-shape=\"" + std::string(to_string(*m.shape)) + "\">\n";
  switch (*m.shape) {
    case MarkerShape::Circle:
      out += "      <circle class=\"cut\" cx=\"" + mm(c.x) + "\" cy=\"" + mm(c.y) + "\" r=\"" + mm(r) + "\"/>\n";
      break;
    case MarkerShape::DoubleDiamond: {
      const double q = size / 4.0;
      out += "      <path class=\"cut\" d=\"" + polygon_path(diamond({c.x - q, c.y}, q, r)) + " " +
             polygon_path(diamond({c.x + q, c.y}, q, r)) + "\"/>\n";
      break;
    }
    case MarkerShape::Triangle:
      out += "      <path class=\"cut\" d=\"" + polygon_path(regular_polygon(c, r, 3)) + "\"/>\n";
      break;
    case MarkerShape::Square:
      out += "      <path class=\"cut\" d=\"" +
             polygon_path({{c.x - r, c.y - r}, {c.x + r, c.y - r}, {c.x + r, c.y + r}, {c.x - r, c.y + r}}) +
             "\"/>\n";
      break;
    case MarkerShape::Pentagon:
      out += "      <path class=\"cut\" d=\"" + polygon_path(regular_polygon(c, r, 5)) + "\"/>\n";
      break;
    case MarkerShape::QuadrantLine: break;
  }
  out += "    </g>\n";
}

void dot(Point c, std::string& out) {
  out += "      <circle class=\"dot\" cx=\"" + mm(c.x) + "\" cy=\"" + mm(c.y) + "\" r=\"" +
         mm(kBrailleDotDiameterMm / 2.0) + "\"/>\n";
}

void braille_marker(const Marker& m, std::string& out) {
  const BrailleGlyph g = braille_glyph(m.label.at(0));
  const Point c = m.center_mm;
  out += "    <g class=\"braille-cell\"" + marker_attrs(m) + " data-letter=\"" + m.label + "\">\n";
  out += "      <rect class=\"cell-outline\" x=\"" + mm(c.x - g.cell_width_mm / 2.0) + "\" y=\"" +
         mm(c.y - g.cell_height_mm / 2.0) + "\" width=\"" + mm(g.cell_width_mm) + "\" height=\"" +
         mm(g.cell_height_mm) + "\"/>\n";
  for (const int d : g.dots) dot(braille_dot_center(g, d, c), out);
  out += "    </g>\n";
}

void quadrant_line_paths(const OverlayConfig& o, std::string& out) {
  for (const Marker& line : quadrant_lines(o)) {
    const Point c = line.center_mm;
    const double hw = kQuadrantLineHalfWidthMm;
    const double hh = o.marker_size_mm / 2.0;
    out += "    <path class=\"quadrant-line\" data-label=\"" + line.label + "\" d=\"" +
           polygon_path({{c.x - hw, c.y - hh}, {c.x + hw, c.y - hh}, {c.x + hw, c.y + hh}, {c.x - hw, c.y + hh}}) +
           "\"/>\n";
  }
}

}  // namespace

std::string export_overlay_svg(const OverlayConfig& o) {
  const auto problems = overlay_violations(o);
  if (!problems.empty()) throw DomainError("invalid overlay: " + problems.front());

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + mm(o.screen_width_mm) + "mm\" height=\"" +
         mm(o.screen_height_mm) + "mm\" viewBox=\"0 0 " + mm(o.screen_width_mm) + " " + mm(o.screen_height_mm) +
         "\">\n";
  out += "  <title>" + o.name + "</title>\n";
  out += "  <style>.cut,.quadrant-line{fill:none;stroke:#ff0000;stroke-width:0.1}"
         ".cell-outline{fill:none;stroke:#0000ff;stroke-width:0.05}.dot{fill:#000000}</style>\n";
  out += "  <rect class=\"sheet\" x=\"0.00\" y=\"0.00\" width=\"" + mm(o.screen_width_mm) + "\" height=\"" +
         mm(o.screen_height_mm) + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.1\"/>\n";

  const std::vector<Marker> markers = all_markers(o);
  if (o.marker_style == MarkerStyle::CutoutShapes) {
    out += "  <g id=\"cut\" data-layer=\"cut\">\n";
    for (const Marker& m : markers) cut_marker(m, o.marker_size_mm, out);
    quadrant_line_paths(o, out);
    out += "  </g>\n";
  } else {
    out += "  <g id=\"emboss\" data-layer=\"emboss\">\n";
    for (const Marker& m : markers) {
      if (o.marker_style == MarkerStyle::BrailleLetters) {
        braille_marker(m, out);
      } else {
        out += "    <g class=\"bump\"" + marker_attrs(m) + ">\n";
        dot(m.center_mm, out);
        out += "    </g>\n";
      }
    }
    // Embossed sheets raise the quadrant lines instead of cutting them.
    quadrant_line_paths(o, out);
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tapnav
