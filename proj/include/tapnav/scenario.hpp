// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tapnav/geometry.hpp"
#include "tapnav/overlay.hpp"

namespace tapnav {

struct AxisSpec {
  std::string label;
  double min = 0.0;
  double max = 1.0;
  double step = 1.0;
  std::optional<std::string> unit;

  friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

struct DataPoint {
  std::string id;
  std::string label;
  double x = 0.0;
  double y = 0.0;
  std::map<std::string, std::string> attrs;

  friend bool operator==(const DataPoint&, const DataPoint&) = default;
};

struct ScatterPlot {
  std::string title;
  std::string item_noun = "data point";  // singular, used in spoken counts
  AxisSpec x_axis;
  AxisSpec y_axis;
  std::vector<DataPoint> points;
  Rect plot_area_mm;

  friend bool operator==(const ScatterPlot&, const ScatterPlot&) = default;
};

enum class Role { Button, Link, Label, TableCell, Heading, TextField, NavBarItem, Paragraph, ListItem };

struct UIElement {
  std::string id;
  Role role = Role::Label;
  std::string label;
  std::optional<std::string> value;
  Rect bounds_mm;
  int reading_index = 0;

  friend bool operator==(const UIElement&, const UIElement&) = default;
};

/// GUI screen. `elements` is kept sorted by reading_index, so
/// elements[i].reading_index == i for a valid screen.
struct InterfaceScreen {
  std::string title;
  std::vector<UIElement> elements;

  friend bool operator==(const InterfaceScreen&, const InterfaceScreen&) = default;
};

struct Scenario {
  std::string name;
  BuiltinOverlay overlay_kind = BuiltinOverlay::DataVizCutout;
  std::variant<ScatterPlot, InterfaceScreen> content;
  std::string notes;

  bool is_scatter() const { return std::holds_alternative<ScatterPlot>(content); }
  const ScatterPlot& scatter() const { return std::get<ScatterPlot>(content); }
  const InterfaceScreen& screen() const { return std::get<InterfaceScreen>(content); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class Fixture { MoviesScatter, BankTransactions, TutorialPdf };

/// Affine map from axis values onto the plot area. With BottomUp numbering
/// larger y values land nearer the top edge of the plot area.
Point project_point(const DataPoint& dp, const ScatterPlot& plot,
                    RowNumbering numbering = RowNumbering::BottomUp);

/// Elements whose bounds overlap `region` with positive area, in reading order.
std::vector<UIElement> elements_in(const Rect& region, const InterfaceScreen& screen);

/// Points whose projection lies inside `region` (border inclusive), ordered by
/// projected x, then projected y, then id.
std::vector<DataPoint> points_in(const Rect& region, const ScatterPlot& plot,
                                 RowNumbering numbering = RowNumbering::BottomUp);

Scenario load_fixture(Fixture name);
std::optional<Fixture> fixture_from_name(std::string_view name);
std::string_view fixture_name(Fixture name);

std::string_view to_string(Role role);
std::optional<Role> role_from_string(std::string_view s);

}  // namespace tapnav
