// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

#include "tapnav/errors.hpp"
#include "tapnav/io.hpp"
#include "tapnav/prompts.hpp"
#include "tapnav/spatial.hpp"

namespace tapnav {

namespace {

class Dispatcher {
 public:
  Dispatcher(SessionState& s, std::vector<FeedbackEvent>& out, std::int64_t t)
      : s_(s), sc_(*s.scenario), ov_(*s.overlay), out_(out), t_(t) {}

  void operator()(const Tap& tap) {
    switch (tap.fingers) {
      case 1:
        if (sc_.is_scatter()) tap_axis(tap.pos);
        break;
      case 2:
        out_.push_back({CancelAll{}, t_});
        break;
      case 3:
        if (s_.last_prompt) speak(*s_.last_prompt);
        break;
      case 4:
        if (sc_.is_scatter()) speak(overview_text(visualization_overview(sc_.scatter())));
        break;
      default:
        break;
    }
  }

  void operator()(const LongPressStart& lp) {
    s_.pressing = true;
    s_.hover_focus.reset();
    if (sc_.is_scatter()) {
      s_.mode = Mode::Exploring;
      s_.explored_set.clear();
    } else if (s_.mode != Mode::SpatialNav) {
      s_.mode = Mode::Exploring;
    }
    hover(lp.pos);
  }

  void operator()(const Hover& h) {
    if (s_.pressing) hover(h.pos);
  }

  void operator()(const LongPressEnd&) {
    if (!s_.pressing) return;
    s_.pressing = false;
    s_.hover_focus.reset();
    if (sc_.is_scatter()) {
      const ScatterPlot& plot = sc_.scatter();
      std::vector<DataPoint> explored;
      for (const DataPoint& dp : plot.points) {
        if (s_.explored_set.count(dp.id) != 0) explored.push_back(dp);
      }
      speak(exploration_summary(explored, plot));
      s_.mode = Mode::Idle;
    } else if (s_.mode == Mode::Exploring) {
      s_.mode = Mode::Idle;
    }
  }

  void operator()(const Swipe& sw) {
    if (sc_.is_scatter()) return;
    if (sw.fingers == 1) {
      const int dir = sw.direction == SwipeDirection::Right ? 1 : sw.direction == SwipeDirection::Left ? -1 : 0;
      if (dir == 0) return;
      if (s_.mode == Mode::SpatialNav) {
        // Nothing outside the selected division is announced.
        if (s_.selection) {
          step_within_selection(dir);
        } else {
          earcon(EarconKind::Thonk);
        }
      } else {
        step_cursor(dir);
      }
      return;
    }
    if (sw.fingers == 2 && s_.mode != Mode::SpatialNav) {
      if (sw.direction == SwipeDirection::Up) read_from(0);
      if (sw.direction == SwipeDirection::Down) read_from(s_.cursor.value_or(0));
    }
  }

  void operator()(const ThreeFingerDoubleTap&) {
    if (!s_.spatial_nav_available) return;
    s_.selection.reset();
    if (s_.mode == Mode::SpatialNav) {
      s_.mode = s_.pressing ? Mode::Exploring : Mode::Idle;
      speak(spatial_mode_text(false));
    } else {
      s_.mode = Mode::SpatialNav;
      speak(spatial_mode_text(true));
    }
  }

 private:
  void speak(std::string text, bool interrupts = true) {
    s_.last_prompt = text;
    out_.push_back({Speech{std::move(text), interrupts}, t_});
  }

  void earcon(EarconKind kind) { out_.push_back({Earcon{kind}, t_}); }

  bool on_screen(Point p) const { return ov_.screen().contains(p); }

  // Returns true when `key` is new focus; repeated samples over the same
  // target stay silent.
  bool enter(std::string key) {
    if (s_.hover_focus == key) return false;
    s_.hover_focus = std::move(key);
    return true;
  }

  static std::string key_of(const Marker& m) {
    if (m.is_quadrant_line()) return "quadrant:" + m.label;
    return "marker:" + std::string(to_string(m.axis)) + ":" + std::to_string(m.index);
  }

  void tap_axis(Point p) {
    if (col_axis_strip(ov_).contains(p)) {
      speak(scale_text(scale_info(PlotAxis::X, sc_.scatter())));
    } else if (row_axis_strip(ov_).contains(p)) {
      speak(scale_text(scale_info(PlotAxis::Y, sc_.scatter())));
    }
  }

  void hover(Point p) {
    if (!on_screen(p)) {
      s_.hover_focus.reset();
      return;
    }
    if (sc_.is_scatter()) {
      hover_plot(p);
    } else {
      hover_screen(p);
    }
  }

  void hover_plot(Point p) {
    if (const auto m = marker_at(p, ov_)) {
      if (!enter(key_of(*m))) return;
      if (m->is_quadrant_line()) {
        speak(render_prompt("quadrant_line", {{"label", m->label}}));
      } else {
        speak(scatter_marker_summary(*m, summarize_marker(*m, sc_, ov_), sc_.scatter()));
      }
      return;
    }
    if (const auto t = hit_target(p, sc_, ov_)) {
      const auto& dp = std::get<DataPoint>(*t);
      if (!enter("target:" + dp.id)) return;
      earcon(EarconKind::DataPointCue);
      speak(point_detail(dp, sc_.scatter()));
      s_.explored_set.insert(dp.id);
      return;
    }
    s_.hover_focus.reset();
  }

  void hover_screen(Point p) {
    const bool spatial = s_.mode == Mode::SpatialNav;
    if (const auto m = marker_at(p, ov_)) {
      if (!enter(key_of(*m))) return;
      if (m->is_quadrant_line()) {
        if (!spatial) speak(render_prompt("quadrant_line", {{"label", m->label}}));
      } else if (spatial) {
        select(*m);
      } else {
        speak(interface_marker_survey(*m, summarize_marker(*m, sc_, ov_)));
      }
      return;
    }
    if (const auto t = hit_target(p, sc_, ov_)) {
      const auto& e = std::get<UIElement>(*t);
      if (!enter("target:" + e.id)) return;
      if (spatial && !inside_selection(e)) return;
      s_.cursor = e.reading_index;
      earcon(EarconKind::Tick);
      speak(element_text(e));
      return;
    }
    s_.hover_focus.reset();
  }

  std::vector<UIElement> selection_targets() const {
    std::vector<UIElement> out;
    for (Target& t : line_of_sight(*s_.selection, sc_, ov_).targets) out.push_back(std::get<UIElement>(std::move(t)));
    return out;
  }

  bool inside_selection(const UIElement& e) const {
    if (!s_.selection) return false;
    const auto targets = selection_targets();
    return std::any_of(targets.begin(), targets.end(), [&](const UIElement& t) { return t.id == e.id; });
  }

  void select(const Marker& m) {
    s_.selection = m;
    const auto targets = selection_targets();
    if (targets.empty()) {
      s_.cursor.reset();
    } else {
      s_.cursor = targets.front().reading_index;
    }
    speak(selection_announcement(m.axis, m.label, targets.size()));
  }

  void step_cursor(int dir) {
    const auto& elements = sc_.screen().elements;
    const int n = static_cast<int>(elements.size());
    int next = 0;
    if (!s_.cursor) {
      next = dir > 0 ? 0 : n - 1;
    } else {
      next = *s_.cursor + dir;
      if (next < 0 || next >= n) {
        earcon(EarconKind::Thonk);
        return;
      }
    }
    s_.cursor = next;
    earcon(EarconKind::Tick);
    speak(element_text(elements[static_cast<std::size_t>(next)]));
  }

  void step_within_selection(int dir) {
    const auto targets = selection_targets();
    const int n = static_cast<int>(targets.size());
    if (n == 0) {
      earcon(EarconKind::Thonk);
      return;
    }
    int k = -1;
    for (int i = 0; i < n; ++i) {
      if (s_.cursor && targets[static_cast<std::size_t>(i)].reading_index == *s_.cursor) k = i;
    }
    const int next = k < 0 ? (dir > 0 ? 0 : n - 1) : k + dir;
    if (next < 0 || next >= n) {
      earcon(EarconKind::Thonk);
      return;
    }
    const UIElement& e = targets[static_cast<std::size_t>(next)];
    s_.cursor = e.reading_index;
    earcon(EarconKind::Tick);
    speak(order_announcement(static_cast<std::size_t>(next + 1), targets.size(), e));
  }

  void read_from(int start) {
    const auto& elements = sc_.screen().elements;
    bool first = true;
    for (std::size_t i = static_cast<std::size_t>(start); i < elements.size(); ++i) {
      speak(render_prompt("reading_chunk", {{"item", element_text(elements[i])}}), first);
      first = false;
    }
    s_.cursor = static_cast<int>(elements.size()) - 1;
  }

  SessionState& s_;
  const Scenario& sc_;
  const OverlayConfig& ov_;
  std::vector<FeedbackEvent>& out_;
  std::int64_t t_;
};

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

SessionState initial_state(std::shared_ptr<const Scenario> scenario, std::shared_ptr<const OverlayConfig> overlay) {
  if (!scenario || !overlay) throw DomainError("a session needs both a scenario and an overlay");
  require_compatible(*scenario, *overlay);
  SessionState s;
  s.spatial_nav_available = !scenario->is_scatter();
  s.scenario = std::move(scenario);
  s.overlay = std::move(overlay);
  return s;
}

DispatchResult dispatch(const Gesture& gesture, SessionState state) {
  std::vector<FeedbackEvent> out;
  Dispatcher d(state, out, gesture.t_ms);
  std::visit(d, gesture.kind);
  return {std::move(state), std::move(out)};
}

bool observable_change(const SessionState& a, const SessionState& b) {
  return a.mode != b.mode || a.cursor != b.cursor || a.selection != b.selection;
}

std::string config_hash(const Scenario& scenario, const OverlayConfig& overlay, const RecognizerConfig& cfg) {
  std::uint64_t h = fnv1a(serialize_scenario(scenario));
  h = fnv1a(serialize_overlay(overlay), h);
  h = fnv1a(serialize_recognizer_config(cfg), h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TranscriptMeta transcript_meta(const Scenario& scenario, const OverlayConfig& overlay, const RecognizerConfig& cfg) {
  return {scenario.name, overlay.name, config_hash(scenario, overlay, cfg)};
}

Transcript run_session(std::span<const TouchEvent> trace, const Scenario& scenario, const OverlayConfig& overlay,
                       const RecognizerConfig& cfg) {
  Transcript transcript{transcript_meta(scenario, overlay, cfg), {}};
  SessionState state = initial_state(std::make_shared<const Scenario>(scenario),
                                     std::make_shared<const OverlayConfig>(overlay));
  for (const Gesture& g : recognize(trace, cfg)) {
    DispatchResult r = dispatch(g, std::move(state));
    state = std::move(r.state);
    transcript.events.insert(transcript.events.end(), r.feedback.begin(), r.feedback.end());
  }
  return transcript;
}

Session::Session(std::shared_ptr<const Scenario> scenario, std::shared_ptr<const OverlayConfig> overlay,
                 RecognizerConfig cfg)
    : recognizer_(cfg),
      state_(initial_state(scenario, overlay)),
      transcript_{transcript_meta(*scenario, *overlay, cfg), {}} {}

std::vector<Session::Step> Session::apply(const std::vector<Gesture>& gestures) {
  std::vector<Step> steps;
  for (const Gesture& g : gestures) {
    DispatchResult r = dispatch(g, state_);
    Step step{r.feedback, observable_change(state_, r.state), r.state.mode, r.state.cursor, r.state.selection};
    state_ = std::move(r.state);
    transcript_.events.insert(transcript_.events.end(), r.feedback.begin(), r.feedback.end());
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<Session::Step> Session::feed(const TouchEvent& event) { return apply(recognizer_.feed(event)); }

std::vector<Session::Step> Session::finish() { return apply(recognizer_.finish()); }

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Idle: return "idle";
    case Mode::Exploring: return "exploring";
    case Mode::SpatialNav: return "spatial_nav";
  }
  return "idle";
}

std::string_view to_string(EarconKind kind) {
  switch (kind) {
    case EarconKind::Tick: return "tick";
    case EarconKind::Thonk: return "thonk";
    case EarconKind::DataPointCue: return "data_point_cue";
  }
  return "tick";
}

}  // namespace tapnav
