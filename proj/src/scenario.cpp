// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/scenario.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <utility>

#include "fixture_data.hpp"
#include "tapnav/errors.hpp"
#include "tapnav/io.hpp"

namespace tapnav {

Point project_point(const DataPoint& dp, const ScatterPlot& plot, RowNumbering numbering) {
  const AxisSpec& xa = plot.x_axis;
  const AxisSpec& ya = plot.y_axis;
  if (dp.x < xa.min || dp.x > xa.max || dp.y < ya.min || dp.y > ya.max) {
    throw DomainError("data point '" + dp.id + "' lies outside the axis ranges");
  }
  const Rect& area = plot.plot_area_mm;
  const double fx = (dp.x - xa.min) / (xa.max - xa.min);
  const double fy = (dp.y - ya.min) / (ya.max - ya.min);
  const double px = area.x0 + fx * area.width();
  const double py = numbering == RowNumbering::BottomUp ? area.y1 - fy * area.height()
                                                        : area.y0 + fy * area.height();
  return {px, py};
}

std::vector<UIElement> elements_in(const Rect& region, const InterfaceScreen& screen) {
  std::vector<UIElement> out;
  for (const UIElement& e : screen.elements) {
    if (e.bounds_mm.overlaps(region)) out.push_back(e);
  }
  std::stable_sort(out.begin(), out.end(), [](const UIElement& a, const UIElement& b) {
    return a.reading_index < b.reading_index;
  });
  return out;
}

std::vector<DataPoint> points_in(const Rect& region, const ScatterPlot& plot, RowNumbering numbering) {
  std::vector<std::pair<Point, const DataPoint*>> hits;
  for (const DataPoint& dp : plot.points) {
    const Point p = project_point(dp, plot, numbering);
    if (region.contains(p)) hits.emplace_back(p, &dp);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.x, a.first.y, a.second->id) < std::tie(b.first.x, b.first.y, b.second->id);
  });
  std::vector<DataPoint> out;
  out.reserve(hits.size());
  for (const auto& [p, dp] : hits) out.push_back(*dp);
  return out;
}

Scenario load_fixture(Fixture name) {
  switch (name) {
    case Fixture::MoviesScatter: return parse_scenario(fixture_data::kMoviesScatter);
    case Fixture::BankTransactions: return parse_scenario(fixture_data::kBankTransactions);
    case Fixture::TutorialPdf: return parse_scenario(fixture_data::kTutorialPdf);
  }
  throw DomainError("unknown fixture");
}

std::optional<Fixture> fixture_from_name(std::string_view name) {
  if (name == "MoviesScatter") return Fixture::MoviesScatter;
  if (name == "BankTransactions") return Fixture::BankTransactions;
  if (name == "TutorialPdf") return Fixture::TutorialPdf;
  return std::nullopt;
}

std::string_view fixture_name(Fixture name) {
  switch (name) {
    case Fixture::MoviesScatter: return "MoviesScatter";
    case Fixture::BankTransactions: return "BankTransactions";
    case Fixture::TutorialPdf: return "TutorialPdf";
  }
  return "";
}

namespace {
constexpr std::array<std::pair<Role, std::string_view>, 9> kRoleNames = {{
    {Role::Button, "button"},
    {Role::Link, "link"},
    {Role::Label, "label"},
    {Role::TableCell, "table_cell"},
    {Role::Heading, "heading"},
    {Role::TextField, "text_field"},
    {Role::NavBarItem, "nav_bar_item"},
    {Role::Paragraph, "paragraph"},
    {Role::ListItem, "list_item"},
}};
}  // namespace

std::string_view to_string(Role role) {
  for (const auto& [r, s] : kRoleNames) {
    if (r == role) return s;
  }
  return "label";
}

std::optional<Role> role_from_string(std::string_view s) {
  for (const auto& [r, name] : kRoleNames) {
    if (name == s) return r;
  }
  return std::nullopt;
}

}  // namespace tapnav
