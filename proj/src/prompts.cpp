// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/prompts.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tapnav {

namespace {

constexpr std::array<PromptTemplate, 20> kTemplates = {{
    {"marker_summary_shared", "{marker}: {count} {nouns} with {value} {axis_label}{quadrants}"},
    {"marker_summary_range", "{marker}: {count} {nouns}, {axis_label} {min} to {max}{quadrants}"},
    {"marker_summary_empty", "{marker}: no {nouns}"},
    {"quadrant_counts", "; quadrants: {counts}"},
    {"marker_survey", "{marker}: {count} screen elements, first {item}"},
    {"marker_survey_one", "{marker}: 1 screen element, {item}"},
    {"marker_survey_empty", "{marker}: no screen elements"},
    {"selection", "{count} screen elements on {axis} {label}, selecting first"},
    {"selection_one", "1 screen element on {axis} {label}, selecting first"},
    {"selection_empty", "no screen elements on {axis} {label}"},
    {"order", "item {position} of {count}: {item}"},
    {"point_detail", "{label}, {x_label} {x}, {y_label} {y}"},
    {"scale_info", "{axis} axis, {label}: minimum {min}, maximum {max}, step {step}{unit}"},
    {"overview", "{title}: {count} {nouns}. {x_scale}. {y_scale}"},
    {"exploration_none", "no data points explored"},
    {"exploration_many", "{count} {nouns} explored, {x_label} {x_min} to {x_max}, {y_label} {y_min} to {y_max}"},
    {"reading_chunk", "{item}"},
    {"spatial_on", "spatial navigation on"},
    {"spatial_off", "spatial navigation off"},
    {"quadrant_line", "{label}"},
}};

std::string_view template_text(std::string_view id) {
  for (const PromptTemplate& t : kTemplates) {
    if (t.id == id) return t.text;
  }
  throw std::logic_error("unknown prompt template " + std::string(id));
}

std::string plural(const std::string& noun, std::size_t n) { return n == 1 ? noun : noun + "s"; }

std::string_view role_suffix(Role role) {
  switch (role) {
    case Role::Button: return "button";
    case Role::Link: return "link";
    case Role::Heading: return "heading";
    case Role::TextField: return "text field";
    case Role::NavBarItem: return "tab";
    case Role::ListItem: return "list item";
    case Role::Label:
    case Role::TableCell:
    case Role::Paragraph: break;
  }
  return "";
}

}  // namespace

std::span<const PromptTemplate> prompt_templates() { return kTemplates; }

std::string render_prompt(std::string_view id,
                          std::initializer_list<std::pair<std::string_view, std::string>> args) {
  const std::string_view text = template_text(id);
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '{') {
      out.push_back(text[i++]);
      continue;
    }
    const std::size_t close = text.find('}', i);
    const std::string_view key = text.substr(i + 1, close - i - 1);
    const auto it = std::find_if(args.begin(), args.end(), [&](const auto& a) { return a.first == key; });
    if (it == args.end()) throw std::logic_error("missing argument {" + std::string(key) + "} for " + std::string(id));
    out += it->second;
    i = close + 1;
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string count_words(std::size_t n) {
  static constexpr std::array<std::string_view, 21> kWords = {
      "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
      "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen",
      "nineteen", "twenty"};
  if (n < kWords.size()) return std::string(kWords[n]);
  return std::to_string(n);
}

std::string marker_name(const Marker& m) {
  if (m.is_quadrant_line()) return m.label;
  return std::string(to_string(m.axis)) + " " + m.label;
}

std::string element_text(const UIElement& e) {
  std::string s = e.label;
  if (e.value) s += ", " + *e.value;
  const std::string_view suffix = role_suffix(e.role);
  if (!suffix.empty()) s += ", " + std::string(suffix);
  return s;
}

std::string point_detail(const DataPoint& dp, const ScatterPlot& plot) {
  return render_prompt("point_detail", {{"label", dp.label},
                                        {"x_label", plot.x_axis.label},
                                        {"x", format_number(dp.x)},
                                        {"y_label", plot.y_axis.label},
                                        {"y", format_number(dp.y)}});
}

std::string scatter_marker_summary(const Marker& m, const MarkerSummary& s, const ScatterPlot& plot) {
  const std::string nouns = plural(plot.item_noun, s.count);
  if (s.count == 0) return render_prompt("marker_summary_empty", {{"marker", marker_name(m)}, {"nouns", nouns}});

  std::string quadrants;
  if (s.quadrant_counts) {
    std::string counts;
    for (const auto& [ordinal, n] : *s.quadrant_counts) {
      if (!counts.empty()) counts += ", ";
      counts += std::to_string(n);
    }
    quadrants = render_prompt("quadrant_counts", {{"counts", counts}});
  }
  const std::string& axis_label = m.axis == Axis::Column ? plot.x_axis.label : plot.y_axis.label;
  if (format_number(*s.min_value) == format_number(*s.max_value)) {
    return render_prompt("marker_summary_shared", {{"marker", marker_name(m)},
                                                   {"count", count_words(s.count)},
                                                   {"nouns", nouns},
                                                   {"value", format_number(*s.min_value)},
                                                   {"axis_label", axis_label},
                                                   {"quadrants", quadrants}});
  }
  return render_prompt("marker_summary_range", {{"marker", marker_name(m)},
                                                {"count", count_words(s.count)},
                                                {"nouns", nouns},
                                                {"axis_label", axis_label},
                                                {"min", format_number(*s.min_value)},
                                                {"max", format_number(*s.max_value)},
                                                {"quadrants", quadrants}});
}

std::string interface_marker_survey(const Marker& m, const MarkerSummary& s) {
  if (s.count == 0) return render_prompt("marker_survey_empty", {{"marker", marker_name(m)}});
  if (s.count == 1) {
    return render_prompt("marker_survey_one", {{"marker", marker_name(m)}, {"item", *s.first_target_label}});
  }
  return render_prompt("marker_survey", {{"marker", marker_name(m)},
                                         {"count", std::to_string(s.count)},
                                         {"item", *s.first_target_label}});
}

std::string selection_announcement(Axis axis, std::string_view label, std::size_t count) {
  const std::string axis_word(to_string(axis));
  if (count == 0) return render_prompt("selection_empty", {{"axis", axis_word}, {"label", std::string(label)}});
  if (count == 1) return render_prompt("selection_one", {{"axis", axis_word}, {"label", std::string(label)}});
  return render_prompt("selection",
                       {{"count", std::to_string(count)}, {"axis", axis_word}, {"label", std::string(label)}});
}

std::string order_announcement(std::size_t position, std::size_t count, const UIElement& e) {
  return render_prompt("order", {{"position", std::to_string(position)},
                                 {"count", std::to_string(count)},
                                 {"item", element_text(e)}});
}

std::string scale_text(const ScaleInfo& info) {
  return render_prompt("scale_info", {{"axis", info.axis == PlotAxis::X ? "x" : "y"},
                                      {"label", info.label},
                                      {"min", format_number(info.min)},
                                      {"max", format_number(info.max)},
                                      {"step", format_number(info.step)},
                                      {"unit", info.unit ? ", unit " + *info.unit : ""}});
}

std::string overview_text(const VisualizationOverview& o) {
  return render_prompt("overview", {{"title", o.title},
                                    {"count", std::to_string(o.total)},
                                    {"nouns", plural(o.item_noun, o.total)},
                                    {"x_scale", scale_text(o.x)},
                                    {"y_scale", scale_text(o.y)}});
}

std::string exploration_summary(const std::vector<DataPoint>& explored, const ScatterPlot& plot) {
  if (explored.empty()) return render_prompt("exploration_none", {});
  if (explored.size() == 1) return point_detail(explored.front(), plot);
  auto [x_min, x_max] = std::minmax_element(explored.begin(), explored.end(),
                                            [](const DataPoint& a, const DataPoint& b) { return a.x < b.x; });
  auto [y_min, y_max] = std::minmax_element(explored.begin(), explored.end(),
                                            [](const DataPoint& a, const DataPoint& b) { return a.y < b.y; });
  return render_prompt("exploration_many", {{"count", std::to_string(explored.size())},
                                            {"nouns", plural(plot.item_noun, explored.size())},
                                            {"x_label", plot.x_axis.label},
                                            {"x_min", format_number(x_min->x)},
                                            {"x_max", format_number(x_max->x)},
                                            {"y_label", plot.y_axis.label},
                                            {"y_min", format_number(y_min->y)},
                                            {"y_max", format_number(y_max->y)}});
}

std::string spatial_mode_text(bool enabled) { return render_prompt(enabled ? "spatial_on" : "spatial_off", {}); }

}  // namespace tapnav
