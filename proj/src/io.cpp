// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <utility>

#include "json.hpp"

namespace tapnav {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {


constexpr std::array<std::pair<Orientation, std::string_view>, 2> kOrientations = {
    {{Orientation::Landscape, "landscape"}, {Orientation::Portrait, "portrait"}}};
constexpr std::array<std::pair<MarkerStyle, std::string_view>, 3> kMarkerStyles = {
    {{MarkerStyle::CutoutShapes, "cutout_shapes"},
     {MarkerStyle::BrailleLetters, "braille_letters"},
     {MarkerStyle::PlainBumps, "plain_bumps"}}};
constexpr std::array<std::pair<RowAxisEdge, std::string_view>, 2> kRowEdges = {
    {{RowAxisEdge::Left, "left"}, {RowAxisEdge::Right, "right"}}};
constexpr std::array<std::pair<ColAxisEdge, std::string_view>, 2> kColEdges = {
    {{ColAxisEdge::Top, "top"}, {ColAxisEdge::Bottom, "bottom"}}};
constexpr std::array<std::pair<RowNumbering, std::string_view>, 2> kNumberings = {
    {{RowNumbering::TopDown, "top_down"}, {RowNumbering::BottomUp, "bottom_up"}}};
constexpr std::array<std::pair<Phase, std::string_view>, 3> kPhases = {
    {{Phase::Down, "down"}, {Phase::Move, "move"}, {Phase::Up, "up"}}};
constexpr std::array<std::pair<EarconKind, std::string_view>, 3> kEarcons = {
    {{EarconKind::Tick, "tick"}, {EarconKind::Thonk, "thonk"}, {EarconKind::DataPointCue, "data_point_cue"}}};

template <class E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [e, s] : table) {
    if (e == value) return s;
  }
  return "";
}

// Collects violations while walking a JSON value; every accessor records a
// located violation instead of throwing.
class Reader {
 public:
  explicit Reader(std::vector<Violation>& out) : out_(out) {}

  void schema(const std::string& path, std::string msg) {
    out_.push_back({Violation::Kind::Schema, path, std::move(msg)});
  }
  void invariant(const std::string& path, std::string msg) {
    out_.push_back({Violation::Kind::Invariant, path, std::move(msg)});
  }

  const json* field(const json& obj, std::string_view key, const std::string& path, bool required = true) {
    const auto it = obj.find(std::string(key));
    if (it == obj.end() || (it->is_null() && required)) {
      if (required) schema(path + "." + std::string(key), "missing required field");
      return nullptr;
    }
    if (it->is_null()) return nullptr;
    return &*it;
  }

  const json* object(const json& obj, std::string_view key, const std::string& path, bool required = true) {
    const json* v = field(obj, key, path, required);
    if (v && !v->is_object()) {
      schema(path + "." + std::string(key), "expected an object");
      return nullptr;
    }
    return v;
  }

  const json* array(const json& obj, std::string_view key, const std::string& path) {
    const json* v = field(obj, key, path);
    if (v && !v->is_array()) {
      schema(path + "." + std::string(key), "expected an array");
      return nullptr;
    }
    return v;
  }

  std::optional<double> number(const json& obj, std::string_view key, const std::string& path, bool required = true) {
    const json* v = field(obj, key, path, required);
    if (!v) return std::nullopt;
    if (!v->is_number()) {
      schema(path + "." + std::string(key), "expected a number");
      return std::nullopt;
    }
    return v->get<double>();
  }

  std::optional<std::int64_t> integer(const json& obj, std::string_view key, const std::string& path,
                                      bool required = true) {
    const json* v = field(obj, key, path, required);
    if (!v) return std::nullopt;
    if (!v->is_number_integer()) {
      schema(path + "." + std::string(key), "expected an integer");
      return std::nullopt;
    }
    return v->get<std::int64_t>();
  }

  std::optional<std::string> string(const json& obj, std::string_view key, const std::string& path,
                                    bool required = true) {
    const json* v = field(obj, key, path, required);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      schema(path + "." + std::string(key), "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<bool> boolean(const json& obj, std::string_view key, const std::string& path) {
    const json* v = field(obj, key, path);
    if (!v) return std::nullopt;
    if (!v->is_boolean()) {
      schema(path + "." + std::string(key), "expected a boolean");
      return std::nullopt;
    }
    return v->get<bool>();
  }

  template <class E, std::size_t N>
  std::optional<E> enumeration(const json& obj, std::string_view key, const std::string& path,
                               const std::array<std::pair<E, std::string_view>, N>& table) {
    const auto s = string(obj, key, path);
    if (!s) return std::nullopt;
    for (const auto& [e, name] : table) {
      if (name == *s) return e;
    }
    std::string allowed;
    for (const auto& [e, name] : table) allowed += (allowed.empty() ? "" : ", ") + std::string(name);
    schema(path + "." + std::string(key), "unknown value '" + *s + "' (expected one of " + allowed + ")");
    return std::nullopt;
  }

  std::optional<Rect> rect(const json& obj, std::string_view key, const std::string& path) {
    const json* r = object(obj, key, path);
    if (!r) return std::nullopt;
    const std::string p = path + "." + std::string(key);
    const auto x0 = number(*r, "x0", p), y0 = number(*r, "y0", p), x1 = number(*r, "x1", p), y1 = number(*r, "y1", p);
    if (!x0 || !y0 || !x1 || !y1) return std::nullopt;
    if (!(*x0 < *x1 && *y0 < *y1)) {
      invariant(p, "rectangle must have x0 < x1 and y0 < y1");
      return std::nullopt;
    }
    return Rect{*x0, *y0, *x1, *y1};
  }

 private:
  std::vector<Violation>& out_;
};

std::string path_at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

json parse_json(std::string_view doc) {
  try {
    return json::parse(doc.begin(), doc.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, doc.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (doc[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    const auto colon = msg.find("syntax error");
    if (colon != std::string::npos) msg = msg.substr(colon);
    throw FormatError({{Violation::Kind::Syntax,
                        "line " + std::to_string(line) + ", column " + std::to_string(col), msg}});
  }
}

void check_version(const json& header, const std::string& path, std::vector<Violation>& v) {
  const auto it = header.find("version");
  if (it == header.end() || !it->is_string()) {
    v.push_back({Violation::Kind::Schema, path + ".version", "missing version string"});
    return;
  }
  const std::string version = it->get<std::string>();
  const auto dot = version.find('.');
  int major = -1;
  try {
    major = std::stoi(version.substr(0, dot));
  } catch (...) {
  }
  if (major != kFormatMajorVersion) {
    v.push_back({Violation::Kind::Version, path + ".version",
                 "unsupported version '" + version + "' (reader understands " + std::string(kFormatVersion) + ")"});
  }
}

// Validates the envelope and returns the payload.
const json& open_envelope(const json& doc, Format expected) {
  std::vector<Violation> v;
  if (!doc.is_object()) throw FormatError({{Violation::Kind::Schema, "$", "expected a JSON object envelope"}});
  const auto fmt = doc.find("format");
  if (fmt == doc.end() || !fmt->is_string()) {
    v.push_back({Violation::Kind::Schema, "$.format", "missing format string"});
  } else if (fmt->get<std::string>() != to_string(expected)) {
    v.push_back({Violation::Kind::Schema, "$.format",
                 "expected format '" + std::string(to_string(expected)) + "', found '" + fmt->get<std::string>() + "'"});
  }
  check_version(doc, "$", v);
  const auto payload = doc.find("payload");
  if (payload == doc.end() || !payload->is_object()) {
    v.push_back({Violation::Kind::Schema, "$.payload", "missing payload object"});
  }
  if (!v.empty()) throw FormatError(std::move(v));
  return *payload;
}

ojson envelope(Format f, ojson payload) {
  ojson doc;
  doc["format"] = to_string(f);
  doc["version"] = kFormatVersion;
  doc["payload"] = std::move(payload);
  return doc;
}

// Overlay -------------------------------------------------------------------

OverlayConfig read_overlay(const json& p, const std::string& path, Reader& r, std::vector<Violation>& v) {
  const std::size_t before = v.size();
  OverlayConfig o;
  o.name = r.string(p, "name", path).value_or("");
  o.orientation = r.enumeration(p, "orientation", path, kOrientations).value_or(Orientation::Landscape);
  o.screen_width_mm = r.number(p, "screen_width_mm", path).value_or(0.0);
  o.screen_height_mm = r.number(p, "screen_height_mm", path).value_or(0.0);
  o.rows = static_cast<int>(r.integer(p, "rows", path).value_or(0));
  o.cols = static_cast<int>(r.integer(p, "cols", path).value_or(0));
  o.pitch_mm = r.number(p, "pitch_mm", path).value_or(0.0);
  o.marker_size_mm = r.number(p, "marker_size_mm", path).value_or(0.0);
  o.marker_style = r.enumeration(p, "marker_style", path, kMarkerStyles).value_or(MarkerStyle::PlainBumps);
  if (const auto q = r.integer(p, "quadrant_interval", path, false)) o.quadrant_interval = static_cast<int>(*q);
  o.row_axis_edge = r.enumeration(p, "row_axis_edge", path, kRowEdges).value_or(RowAxisEdge::Left);
  o.col_axis_edge = r.enumeration(p, "col_axis_edge", path, kColEdges).value_or(ColAxisEdge::Bottom);
  o.row_numbering = r.enumeration(p, "row_numbering", path, kNumberings).value_or(RowNumbering::BottomUp);
  o.margin_mm = r.number(p, "margin_mm", path).value_or(0.0);
  if (v.size() == before) {
    for (std::string& msg : overlay_violations(o)) r.invariant(path, std::move(msg));
  }
  return o;
}

ojson overlay_payload(const OverlayConfig& o) {
  ojson p;
  p["name"] = o.name;
  p["orientation"] = name_of(kOrientations, o.orientation);
  p["screen_width_mm"] = quantize_mm(o.screen_width_mm);
  p["screen_height_mm"] = quantize_mm(o.screen_height_mm);
  p["rows"] = o.rows;
  p["cols"] = o.cols;
  p["pitch_mm"] = quantize_mm(o.pitch_mm);
  p["marker_size_mm"] = quantize_mm(o.marker_size_mm);
  p["marker_style"] = name_of(kMarkerStyles, o.marker_style);
  p["quadrant_interval"] = o.quadrant_interval ? ojson(*o.quadrant_interval) : ojson(nullptr);
  p["row_axis_edge"] = name_of(kRowEdges, o.row_axis_edge);
  p["col_axis_edge"] = name_of(kColEdges, o.col_axis_edge);
  p["row_numbering"] = name_of(kNumberings, o.row_numbering);
  p["margin_mm"] = quantize_mm(o.margin_mm);
  return p;
}

// Scenario ------------------------------------------------------------------

ojson rect_json(const Rect& r) {
  ojson j;
  j["x0"] = quantize_mm(r.x0);
  j["y0"] = quantize_mm(r.y0);
  j["x1"] = quantize_mm(r.x1);
  j["y1"] = quantize_mm(r.y1);
  return j;
}

ojson axis_json(const AxisSpec& a) {
  ojson j;
  j["label"] = a.label;
  j["min"] = a.min;
  j["max"] = a.max;
  j["step"] = a.step;
  j["unit"] = a.unit ? ojson(*a.unit) : ojson(nullptr);
  return j;
}

std::optional<AxisSpec> read_axis(const json& p, std::string_view key, const std::string& path, Reader& r) {
  const json* a = r.object(p, key, path);
  if (!a) return std::nullopt;
  const std::string ap = path + "." + std::string(key);
  AxisSpec axis;
  const auto label = r.string(*a, "label", ap);
  const auto min = r.number(*a, "min", ap), max = r.number(*a, "max", ap), step = r.number(*a, "step", ap);
  axis.unit = r.string(*a, "unit", ap, false);
  if (!label || !min || !max || !step) return std::nullopt;
  axis.label = *label;
  axis.min = *min;
  axis.max = *max;
  axis.step = *step;
  bool ok = true;
  if (!(std::isfinite(axis.max - axis.min) && axis.min < axis.max)) {
    r.invariant(ap, "axis needs min < max with a finite span");
    ok = false;
  }
  if (!(axis.step > 0.0)) {
    r.invariant(ap + ".step", "step must be positive");
    ok = false;
  } else if (ok && axis.step > axis.max - axis.min) {
    r.invariant(ap + ".step", "step must not exceed max - min");
    ok = false;
  }
  if (!ok) return std::nullopt;
  return axis;
}

// Reports each duplicated id at every path where it occurs.
void check_unique_ids(const std::vector<std::pair<std::string, std::string>>& ids_and_paths, Reader& r) {
  std::map<std::string, std::vector<std::string>> seen;
  for (const auto& [id, path] : ids_and_paths) seen[id].push_back(path);
  for (const auto& [id, path] : ids_and_paths) {
    const auto& paths = seen[id];
    if (paths.size() < 2) continue;
    std::string others;
    for (const std::string& q : paths) {
      if (q == path) continue;
      others += (others.empty() ? "" : ", ") + q;
    }
    r.invariant(path, "duplicate id '" + id + "' (also at " + others + ")");
  }
}

ScatterPlot read_scatter(const json& s, const std::string& path, const Rect& screen, Reader& r) {
  ScatterPlot plot;
  plot.title = r.string(s, "title", path).value_or("");
  plot.item_noun = r.string(s, "item_noun", path, false).value_or("data point");
  const auto x_axis = read_axis(s, "x_axis", path, r);
  const auto y_axis = read_axis(s, "y_axis", path, r);
  if (x_axis) plot.x_axis = *x_axis;
  if (y_axis) plot.y_axis = *y_axis;
  if (const auto area = r.rect(s, "plot_area_mm", path)) {
    plot.plot_area_mm = *area;
    if (!screen.contains(*area)) r.invariant(path + ".plot_area_mm", "plot area lies outside the screen");
  }
  const json* points = r.array(s, "points", path);
  if (!points) return plot;
  const std::string pp = path + ".points";
  std::vector<std::pair<std::string, std::string>> ids;
  for (std::size_t i = 0; i < points->size(); ++i) {
    const json& pj = (*points)[i];
    const std::string ip = path_at(pp, i);
    if (!pj.is_object()) {
      r.schema(ip, "expected an object");
      continue;
    }
    DataPoint dp;
    const auto id = r.string(pj, "id", ip);
    dp.label = r.string(pj, "label", ip).value_or("");
    const auto x = r.number(pj, "x", ip);
    const auto y = r.number(pj, "y", ip);
    if (const json* attrs = r.object(pj, "attrs", ip, false)) {
      for (const auto& [k, val] : attrs->items()) {
        if (!val.is_string()) {
          r.schema(ip + ".attrs." + k, "expected a string");
          continue;
        }
        dp.attrs[k] = val.get<std::string>();
      }
    }
    if (!id || !x || !y) continue;
    dp.id = *id;
    dp.x = *x;
    dp.y = *y;
    ids.emplace_back(dp.id, ip + ".id");
    if (x_axis && (dp.x < x_axis->min || dp.x > x_axis->max)) r.invariant(ip + ".x", "x outside the x-axis range");
    if (y_axis && (dp.y < y_axis->min || dp.y > y_axis->max)) r.invariant(ip + ".y", "y outside the y-axis range");
    plot.points.push_back(std::move(dp));
  }
  check_unique_ids(ids, r);
  return plot;
}

InterfaceScreen read_screen(const json& s, const std::string& path, const Rect& screen_rect, Reader& r) {
  InterfaceScreen screen;
  screen.title = r.string(s, "title", path).value_or("");
  const json* elements = r.array(s, "elements", path);
  if (!elements) return screen;
  const std::string ep = path + ".elements";
  if (elements->empty()) r.invariant(ep, "a screen needs at least one element");
  std::vector<std::pair<std::string, std::string>> ids;
  std::map<std::int64_t, std::vector<std::string>> reading;
  for (std::size_t i = 0; i < elements->size(); ++i) {
    const json& ej = (*elements)[i];
    const std::string ip = path_at(ep, i);
    if (!ej.is_object()) {
      r.schema(ip, "expected an object");
      continue;
    }
    UIElement e;
    const auto id = r.string(ej, "id", ip);
    std::optional<Role> role;
    if (const auto role_name = r.string(ej, "role", ip)) {
      role = role_from_string(*role_name);
      if (!role) r.schema(ip + ".role", "unknown role '" + *role_name + "'");
    }
    const auto label = r.string(ej, "label", ip);
    e.value = r.string(ej, "value", ip, false);
    const auto bounds = r.rect(ej, "bounds_mm", ip);
    const auto ri = r.integer(ej, "reading_index", ip);
    if (id) ids.emplace_back(*id, ip + ".id");
    if (ri) {
      if (*ri < 0) {
        r.invariant(ip + ".reading_index", "reading_index must be non-negative");
      } else {
        reading[*ri].push_back(ip + ".reading_index");
      }
    }
    if (bounds && !screen_rect.contains(*bounds)) r.invariant(ip + ".bounds_mm", "bounds lie outside the screen");
    if (!id || !role || !label || !bounds || !ri) continue;
    e.id = *id;
    e.role = *role;
    e.label = *label;
    e.bounds_mm = *bounds;
    e.reading_index = static_cast<int>(*ri);
    screen.elements.push_back(std::move(e));
  }
  check_unique_ids(ids, r);
  for (const auto& [index, paths] : reading) {
    if (paths.size() < 2) continue;
    for (const std::string& p : paths) r.invariant(p, "duplicate reading_index " + std::to_string(index));
  }
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(elements->size()); ++k) {
    if (reading.count(k) == 0 && reading.size() == elements->size()) {
      r.invariant(ep, "reading_index sequence is missing " + std::to_string(k));
    }
  }
  std::stable_sort(screen.elements.begin(), screen.elements.end(),
                   [](const UIElement& a, const UIElement& b) { return a.reading_index < b.reading_index; });
  return screen;
}

ojson scenario_payload(const Scenario& s) {
  ojson p;
  p["name"] = s.name;
  p["overlay_kind"] = builtin_overlay_name(s.overlay_kind);
  p["notes"] = s.notes;
  if (s.is_scatter()) {
    const ScatterPlot& plot = s.scatter();
    ojson j;
    j["title"] = plot.title;
    j["item_noun"] = plot.item_noun;
    j["x_axis"] = axis_json(plot.x_axis);
    j["y_axis"] = axis_json(plot.y_axis);
    j["plot_area_mm"] = rect_json(plot.plot_area_mm);
    j["points"] = ojson::array();
    for (const DataPoint& dp : plot.points) {
      ojson pj;
      pj["id"] = dp.id;
      pj["label"] = dp.label;
      pj["x"] = dp.x;
      pj["y"] = dp.y;
      pj["attrs"] = ojson::object();
      for (const auto& [k, v] : dp.attrs) pj["attrs"][k] = v;
      j["points"].push_back(std::move(pj));
    }
    p["scatter_plot"] = std::move(j);
  } else {
    const InterfaceScreen& screen = s.screen();
    ojson j;
    j["title"] = screen.title;
    j["elements"] = ojson::array();
    for (const UIElement& e : screen.elements) {
      ojson ej;
      ej["id"] = e.id;
      ej["role"] = to_string(e.role);
      ej["label"] = e.label;
      ej["value"] = e.value ? ojson(*e.value) : ojson(nullptr);
      ej["bounds_mm"] = rect_json(e.bounds_mm);
      ej["reading_index"] = e.reading_index;
      j["elements"].push_back(std::move(ej));
    }
    p["interface_screen"] = std::move(j);
  }
  return p;
}

// Trace ----------------------------------------------------------------------

// Mirrors the recognizer's stream rules so malformed traces are rejected at
// load time with a located violation.
void check_stream(const std::vector<TouchEvent>& events, const std::vector<std::string>& paths, Reader& r) {
  std::map<int, std::size_t> down_at;
  std::optional<std::int64_t> last_t;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TouchEvent& e = events[i];
    if (last_t && e.t_ms < *last_t) r.invariant(paths[i] + ".t_ms", "timestamp decreases");
    last_t = e.t_ms;
    const bool active = down_at.count(e.pointer_id) != 0;
    if (e.phase == Phase::Down) {
      if (active) r.invariant(paths[i], "pointer " + std::to_string(e.pointer_id) + " is already down");
      down_at[e.pointer_id] = i;
    } else if (!active) {
      r.invariant(paths[i], "pointer " + std::to_string(e.pointer_id) + " has no matching down");
    } else if (e.phase == Phase::Up) {
      down_at.erase(e.pointer_id);
    }
  }
  for (const auto& [id, i] : down_at) r.invariant(paths[i], "pointer " + std::to_string(id) + " is never lifted");
}

ojson event_json(const FeedbackEvent& e) {
  ojson j;
  j["t_ms"] = e.t_ms;
  if (const auto* s = std::get_if<Speech>(&e.kind)) {
    j["type"] = "speech";
    j["text"] = s->text;
    j["interrupts"] = s->interrupts;
  } else if (const auto* ec = std::get_if<Earcon>(&e.kind)) {
    j["type"] = "earcon";
    j["kind"] = name_of(kEarcons, ec->kind);
  } else {
    j["type"] = "cancel_all";
  }
  return j;
}

}  // namespace

std::string Violation::to_line() const {
  return std::string(tapnav::to_string(kind)) + "\t" + location + "\t" + message;
}

namespace {
std::string summarize(const std::vector<Violation>& v) {
  if (v.empty()) return "invalid document";
  std::string s = v.front().location + ": " + v.front().message;
  if (v.size() > 1) s += " (and " + std::to_string(v.size() - 1) + " more)";
  return s;
}
}  // namespace

FormatError::FormatError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Overlay: return "overlay";
    case Format::Scenario: return "scenario";
    case Format::Trace: return "trace";
    case Format::Transcript: return "transcript";
  }
  return "";
}

std::string_view to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Syntax: return "syntax";
    case Violation::Kind::Version: return "version";
    case Violation::Kind::Schema: return "schema";
    case Violation::Kind::Invariant: return "invariant";
  }
  return "";
}

double quantize_mm(double v) {
  const double q = std::round(v * 100.0) / 100.0;
  return q == 0.0 ? 0.0 : q;
}

OverlayConfig parse_overlay(std::string_view doc) {
  const json j = parse_json(doc);
  const json& payload = open_envelope(j, Format::Overlay);
  std::vector<Violation> v;
  Reader r(v);
  OverlayConfig o = read_overlay(payload, "$.payload", r, v);
  if (!v.empty()) throw FormatError(std::move(v));
  return o;
}

Scenario parse_scenario(std::string_view doc) {
  const json j = parse_json(doc);
  const json& p = open_envelope(j, Format::Scenario);
  std::vector<Violation> v;
  Reader r(v);
  const std::string path = "$.payload";
  Scenario s;
  s.name = r.string(p, "name", path).value_or("");
  if (s.name.empty() && v.empty()) r.invariant(path + ".name", "name must not be empty");
  s.notes = r.string(p, "notes", path, false).value_or("");
  const auto kind_name = r.string(p, "overlay_kind", path);
  std::optional<BuiltinOverlay> kind;
  if (kind_name) {
    kind = builtin_overlay_from_name(*kind_name);
    if (!kind) r.schema(path + ".overlay_kind", "unknown overlay kind '" + *kind_name + "'");
  }
  const Rect screen = kind ? builtin_overlay(*kind).screen() : Rect{0, 0, 1e9, 1e9};
  if (kind) s.overlay_kind = *kind;

  const json* scatter = r.object(p, "scatter_plot", path, false);
  const json* ui = r.object(p, "interface_screen", path, false);
  if ((scatter != nullptr) == (ui != nullptr)) {
    r.schema(path, "exactly one of scatter_plot or interface_screen is required");
  } else if (scatter) {
    s.content = read_scatter(*scatter, path + ".scatter_plot", screen, r);
    if (kind && *kind != BuiltinOverlay::DataVizCutout) {
      r.invariant(path + ".overlay_kind", "scatterplots use the landscape DataVizCutout overlay");
    }
  } else {
    s.content = read_screen(*ui, path + ".interface_screen", screen, r);
  }
  if (!v.empty()) throw FormatError(std::move(v));
  return s;
}

std::vector<TouchEvent> parse_trace(std::string_view doc) {
  const json j = parse_json(doc);
  const json& p = open_envelope(j, Format::Trace);
  std::vector<Violation> v;
  Reader r(v);
  std::vector<TouchEvent> events;
  std::vector<std::string> paths;
  if (const json* arr = r.array(p, "events", "$.payload")) {
    for (std::size_t i = 0; i < arr->size(); ++i) {
      const json& ej = (*arr)[i];
      const std::string ip = path_at("$.payload.events", i);
      if (!ej.is_object()) {
        r.schema(ip, "expected an object");
        continue;
      }
      const auto id = r.integer(ej, "pointer_id", ip);
      const auto phase = r.enumeration(ej, "phase", ip, kPhases);
      const auto x = r.number(ej, "x_mm", ip);
      const auto y = r.number(ej, "y_mm", ip);
      const auto t = r.integer(ej, "t_ms", ip);
      if (id && (*id < 0 || *id > 63)) r.invariant(ip + ".pointer_id", "pointer_id must be in 0..63");
      if (!id || !phase || !x || !y || !t) continue;
      events.push_back(TouchEvent{static_cast<int>(*id), *phase, Point{*x, *y}, *t});
      paths.push_back(ip);
    }
  }
  if (v.empty()) check_stream(events, paths, r);
  if (!v.empty()) throw FormatError(std::move(v));
  return events;
}

RecognizerConfig parse_recognizer_config(std::string_view doc) {
  const json j = parse_json(doc);
  if (!j.is_object()) throw FormatError({{Violation::Kind::Schema, "$", "expected a JSON object"}});
  std::vector<Violation> v;
  Reader r(v);
  RecognizerConfig c;
  static const std::array<std::string_view, 7> kKeys = {"tap_max_duration_ms", "long_press_min_ms",
                                                        "multi_finger_window_ms", "double_tap_window_ms",
                                                        "tap_slop_mm", "swipe_min_dist_mm", "swipe_max_duration_ms"};
  for (const auto& [k, val] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), k) == kKeys.end()) r.schema("$." + k, "unknown setting");
  }
  auto ms = [&](std::string_view key, std::int64_t& out) {
    if (const auto x = r.integer(j, key, "$", false)) out = *x;
  };
  auto mm = [&](std::string_view key, double& out) {
    if (const auto x = r.number(j, key, "$", false)) out = *x;
  };
  ms("tap_max_duration_ms", c.tap_max_duration_ms);
  ms("long_press_min_ms", c.long_press_min_ms);
  ms("multi_finger_window_ms", c.multi_finger_window_ms);
  ms("double_tap_window_ms", c.double_tap_window_ms);
  mm("tap_slop_mm", c.tap_slop_mm);
  mm("swipe_min_dist_mm", c.swipe_min_dist_mm);
  ms("swipe_max_duration_ms", c.swipe_max_duration_ms);
  if (v.empty()) {
    for (std::string& msg : recognizer_config_violations(c)) r.invariant("$", std::move(msg));
  }
  if (!v.empty()) throw FormatError(std::move(v));
  return c;
}

Transcript read_transcript(std::string_view doc) {
  Transcript t;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  auto fail = [&](const std::string& msg, Violation::Kind kind = Violation::Kind::Schema) {
    throw FormatError({{kind, "line " + std::to_string(line_no), msg}});
  };
  while (pos < doc.size()) {
    const std::size_t nl = doc.find('\n', pos);
    const std::string_view line = doc.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? doc.size() : nl + 1;
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line.begin(), line.end());
    } catch (const json::parse_error& e) {
      fail(std::string("corrupt line: ") + e.what(), Violation::Kind::Syntax);
    }
    if (!j.is_object()) fail("expected a JSON object");
    std::vector<Violation> v;
    Reader r(v);
    const std::string path = "line " + std::to_string(line_no);
    if (!have_header) {
      if (j.value("format", "") != "transcript") fail("first line must be a transcript header");
      check_version(j, path, v);
      t.meta.scenario = r.string(j, "scenario", path).value_or("");
      t.meta.overlay = r.string(j, "overlay", path).value_or("");
      t.meta.config_hash = r.string(j, "config_hash", path).value_or("");
      if (!v.empty()) throw FormatError(std::move(v));
      have_header = true;
      continue;
    }
    FeedbackEvent e;
    const auto time = r.integer(j, "t_ms", path);
    const auto type = r.string(j, "type", path);
    if (time) e.t_ms = *time;
    if (type == "speech") {
      const auto text = r.string(j, "text", path);
      const auto interrupts = r.boolean(j, "interrupts", path);
      if (text && text->empty()) r.invariant(path + ".text", "speech text must not be empty");
      e.kind = Speech{text.value_or(""), interrupts.value_or(true)};
    } else if (type == "earcon") {
      e.kind = Earcon{r.enumeration(j, "kind", path, kEarcons).value_or(EarconKind::Tick)};
    } else if (type == "cancel_all") {
      e.kind = CancelAll{};
    } else if (type) {
      r.schema(path + ".type", "unknown event type '" + *type + "'");
    }
    if (!t.events.empty() && time && *time < t.events.back().t_ms) {
      r.invariant(path + ".t_ms", "events must be ordered by time");
    }
    if (!v.empty()) throw FormatError(std::move(v));
    t.events.push_back(std::move(e));
  }
  if (!have_header) throw FormatError({{Violation::Kind::Schema, "line 1", "missing transcript header"}});
  return t;
}

std::string serialize_overlay(const OverlayConfig& overlay) {
  return envelope(Format::Overlay, overlay_payload(overlay)).dump(2) + "\n";
}

std::string serialize_scenario(const Scenario& scenario) {
  return envelope(Format::Scenario, scenario_payload(scenario)).dump(2) + "\n";
}

std::string serialize_trace(std::span<const TouchEvent> events) {
  ojson arr = ojson::array();
  for (const TouchEvent& e : events) {
    ojson j;
    j["pointer_id"] = e.pointer_id;
    j["phase"] = name_of(kPhases, e.phase);
    j["x_mm"] = quantize_mm(e.pos.x);
    j["y_mm"] = quantize_mm(e.pos.y);
    j["t_ms"] = e.t_ms;
    arr.push_back(std::move(j));
  }
  ojson payload;
  payload["events"] = std::move(arr);
  // One event per line keeps traces diffable.
  std::string out = "{\"format\":\"trace\",\"version\":\"" + std::string(kFormatVersion) +
                    "\",\"payload\":{\"events\":[";
  for (std::size_t i = 0; i < payload["events"].size(); ++i) {
    out += (i == 0 ? "\n  " : ",\n  ") + payload["events"][i].dump();
  }
  out += payload["events"].empty() ? "]}}\n" : "\n]}}\n";
  return out;
}

std::string serialize_recognizer_config(const RecognizerConfig& c) {
  ojson j;
  j["tap_max_duration_ms"] = c.tap_max_duration_ms;
  j["long_press_min_ms"] = c.long_press_min_ms;
  j["multi_finger_window_ms"] = c.multi_finger_window_ms;
  j["double_tap_window_ms"] = c.double_tap_window_ms;
  j["tap_slop_mm"] = c.tap_slop_mm;
  j["swipe_min_dist_mm"] = c.swipe_min_dist_mm;
  j["swipe_max_duration_ms"] = c.swipe_max_duration_ms;
  return j.dump(2) + "\n";
}

std::string write_transcript(const Transcript& t) {
  ojson header;
  header["format"] = "transcript";
  header["version"] = kFormatVersion;
  header["scenario"] = t.meta.scenario;
  header["overlay"] = t.meta.overlay;
  header["config_hash"] = t.meta.config_hash;
  std::string out = header.dump() + "\n";
  for (const FeedbackEvent& e : t.events) out += event_json(e).dump() + "\n";
  return out;
}

Document parse_and_validate(std::string_view doc, Format expected) {
  switch (expected) {
    case Format::Overlay: return parse_overlay(doc);
    case Format::Scenario: return parse_scenario(doc);
    case Format::Trace: return parse_trace(doc);
    case Format::Transcript: return read_transcript(doc);
  }
  throw FormatError({{Violation::Kind::Schema, "$", "unknown format"}});
}

}  // namespace tapnav
