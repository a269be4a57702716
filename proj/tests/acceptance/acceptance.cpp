// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "generators.hpp"
#include "oracles.hpp"
#include "tapnav/assets.hpp"
#include "tapnav/cli.hpp"
#include "tapnav/engine.hpp"
#include "tapnav/io.hpp"
#include "tapnav/prompts.hpp"
#include "tapnav/session_server.hpp"
#include "tapnav/spatial.hpp"
#include "tapnav/svg.hpp"
#include "ws_client.hpp"

namespace tapnav::acceptance {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::Rng;

const std::string kData = TAPNAV_DATA_DIR;

// Collects failures; keeps the first few messages for the report line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s = std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed";
    for (const auto& m : messages_) s += "; " + m;
    return s;
  }
  void note(std::string n) { note_ = std::move(n); }
  const std::string& note() const { return note_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::string note_;
};

std::string str(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

bool exact_mm(double got, double want) { return std::round(got * 100.0) == std::round(want * 100.0); }

// 1. Builtin overlays carry the published dimensions.
void overlay_fidelity(Check& c) {
  const OverlayConfig braille = builtin_overlay(BuiltinOverlay::InterfaceBraille);
  const OverlayConfig cutout = builtin_overlay(BuiltinOverlay::DataVizCutout);
  c.expect(braille.rows == 21 && braille.cols == 14, "Braille grid " + std::to_string(braille.rows) + "x" +
                                                         std::to_string(braille.cols));
  c.expect(cutout.rows == 14 && cutout.cols == 25, "cutout grid " + std::to_string(cutout.rows) + "x" +
                                                       std::to_string(cutout.cols));
  c.expect(exact_mm(cutout.marker_size_mm, 7.5), "cutout marker " + str(cutout.marker_size_mm));
  c.expect(exact_mm(cutout.pitch_mm, 10.0) && exact_mm(braille.pitch_mm, 10.0), "pitch");
  c.expect(cutout.quadrant_interval == 5, "quadrant interval");
  c.expect(quadrant_lines(cutout).size() == 4, "quadrant line count");
  c.expect(exact_mm(cutout.screen_width_mm, 267.0) && exact_mm(cutout.screen_height_mm, 167.0), "sheet size");
  c.expect(all_markers(cutout).size() == 39 && all_markers(braille).size() == 35, "marker counts");
  for (const OverlayConfig* o : {&braille, &cutout}) {
    c.expect(overlay_violations(*o).empty(), o->name + " violates its own invariants");
    for (const Marker& m : all_markers(*o)) {
      const Point want = testing::oracle_marker_center(m.axis, m.index, *o);
      c.expect(exact_mm(m.center_mm.x, want.x) && exact_mm(m.center_mm.y, want.y),
               o->name + " marker center " + std::to_string(m.index));
    }
  }
  c.note("Braille 21x14, cutout 14x25, 7.5 mm markers, 10 mm pitch, 4 quadrant lines, 267x167 mm");
}

// 2. line_of_sight equals a brute-force band scan on random scenarios.
void line_of_sight_oracle(Check& c) {
  Rng rng(2001);
  std::size_t markers = 0;
  for (int i = 0; i < 1000; ++i) {
    const OverlayConfig o = testing::random_overlay(rng);
    const Scenario s = testing::random_scenario(rng, o, 200);
    for (const Marker& m : all_markers(o)) {
      std::vector<std::string> got;
      for (const Target& t : line_of_sight(m, s, o).targets) got.push_back(target_id(t));
      c.expect(got == testing::oracle_line_of_sight(m.axis, m.index, s, o),
               "scenario " + std::to_string(i) + " " + std::string(to_string(m.axis)) + " " + std::to_string(m.index));
      ++markers;
    }
  }
  c.note("1000 scenarios, " + std::to_string(markers) + " markers");
}

// Adds in-envelope noise to a synthesized gesture, then translates it, shifts
// it in time and renames its pointers.
std::vector<TouchEvent> perturb(Rng& rng, const testing::SynthGesture& g, testing::GestureClass cls,
                                const RecognizerConfig& cfg) {
  using testing::GestureClass;
  std::vector<TouchEvent> events = g.events;
  const bool swipe = cls == GestureClass::SwipeLeft || cls == GestureClass::SwipeRight ||
                     cls == GestureClass::SwipeUp2 || cls == GestureClass::SwipeDown2;
  const bool press = cls == GestureClass::LongPress1 || cls == GestureClass::LongPress2;
  const std::int64_t t0 = events.front().t_ms;
  struct Contact {
    int id;
    Point down;
    std::int64_t from, to;
  };
  std::vector<Contact> contacts;
  std::map<int, std::size_t> open;
  for (const TouchEvent& e : events) {
    if (e.phase == Phase::Down) {
      open[e.pointer_id] = contacts.size();
      contacts.push_back({e.pointer_id, e.pos, e.t_ms, e.t_ms});
    } else if (e.phase == Phase::Up) {
      contacts[open[e.pointer_id]].to = e.t_ms;
    }
  }
  const int extra = testing::uniform_int(rng, 1, 4);
  for (int k = 0; k < extra; ++k) {
    const Contact& ct = contacts[static_cast<std::size_t>(testing::uniform_int(rng, 0, static_cast<int>(contacts.size()) - 1))];
    std::int64_t hi = ct.to;
    if (press) hi = std::min(hi, t0 + cfg.long_press_min_ms - 1);
    if (hi < ct.from) continue;
    const std::int64_t t = std::uniform_int_distribution<std::int64_t>(ct.from, hi)(rng);
    const double reach = swipe ? 30.0 : cfg.tap_slop_mm * 0.99;
    const double a = testing::uniform(rng, 0.0, 6.283185307179586);
    const double r = testing::uniform(rng, 0.0, reach);
    events.push_back({ct.id, Phase::Move, ct.down + Point{r * std::cos(a), r * std::sin(a)}, t});
  }
  std::stable_sort(events.begin(), events.end(), [](const TouchEvent& a, const TouchEvent& b) {
    return std::tuple(a.t_ms, static_cast<int>(a.phase), a.pointer_id) <
           std::tuple(b.t_ms, static_cast<int>(b.phase), b.pointer_id);
  });
  // Rigid changes: translation by a dyadic offset keeps ties exact.
  const Point shift{testing::uniform_int(rng, -4000, 4000) / 64.0, testing::uniform_int(rng, -4000, 4000) / 64.0};
  const std::int64_t dt = testing::uniform_int(rng, 0, 100000);
  std::vector<int> ids(64);
  for (int i = 0; i < 64; ++i) ids[static_cast<std::size_t>(i)] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  for (TouchEvent& e : events) {
    e.pos = e.pos + shift;
    e.t_ms += dt;
    e.pointer_id = ids[static_cast<std::size_t>(e.pointer_id)];
  }
  return events;
}

bool classified_as(const std::vector<TouchEvent>& events, const std::vector<GestureKind>& expected,
                   const RecognizerConfig& cfg) {
  const auto got = recognize(events, cfg);
  if (got.size() != expected.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (!testing::same_kind(got[i].kind, expected[i])) return false;
  }
  return true;
}

// 3. Synthesized gestures classify exactly, alone, perturbed and in sequence.
void gesture_classification(Check& c) {
  Rng rng(3001);
  const RecognizerConfig cfg;
  std::size_t traces = 0;
  for (testing::GestureClass cls : testing::kAllGestureClasses) {
    for (int i = 0; i < 1000; ++i) {
      const Point origin{testing::uniform(rng, 0.0, 200.0), testing::uniform(rng, 0.0, 160.0)};
      const auto g = testing::synth_gesture(rng, cls, cfg, origin, testing::uniform_int(rng, 0, 5000));
      const bool plain = classified_as(g.events, g.expected, cfg);
      c.expect(plain, testing::to_string(cls) + " misclassified as " +
                          [&] {
                            std::vector<GestureKind> k;
                            for (const Gesture& x : recognize(g.events, cfg)) k.push_back(x.kind);
                            return testing::describe_kinds(k);
                          }());
      for (int p = 0; p < 3; ++p) {
        c.expect(classified_as(perturb(rng, g, cls, cfg), g.expected, cfg), testing::to_string(cls) + " perturbed");
      }
      ++traces;
    }
  }
  // Back-to-back gestures with gaps past every window.
  for (int i = 0; i < 300; ++i) {
    std::vector<TouchEvent> stream;
    std::vector<GestureKind> expected;
    std::int64_t t = 0;
    const int n = testing::uniform_int(rng, 2, 8);
    for (int k = 0; k < n; ++k) {
      const auto cls = testing::kAllGestureClasses[testing::uniform_int(rng, 0, 10)];
      const auto g = testing::synth_gesture(rng, cls, cfg, {100.0, 80.0}, t);
      stream.insert(stream.end(), g.events.begin(), g.events.end());
      expected.insert(expected.end(), g.expected.begin(), g.expected.end());
      t = g.end_ms + cfg.double_tap_window_ms + 1;
    }
    c.expect(classified_as(stream, expected, cfg), "sequence " + std::to_string(i));
  }
  c.note(std::to_string(traces) + " traces across 11 classes, 3 perturbations each, 300 sequences");
}

struct ScreenCase {
  std::shared_ptr<const Scenario> scenario;
  std::shared_ptr<const OverlayConfig> overlay;
};

std::vector<ScreenCase> screen_cases(Rng& rng, int random_count) {
  std::vector<ScreenCase> out;
  for (Fixture f : {Fixture::BankTransactions, Fixture::TutorialPdf}) {
    auto s = std::make_shared<const Scenario>(load_fixture(f));
    out.push_back({s, std::make_shared<const OverlayConfig>(builtin_overlay(s->overlay_kind))});
  }
  for (int i = 0; i < random_count; ++i) {
    auto o = std::make_shared<const OverlayConfig>(testing::random_overlay(rng));
    out.push_back({std::make_shared<const Scenario>(testing::random_screen(rng, *o, 60)), o});
  }
  return out;
}

const UIElement& element_by_id(const Scenario& s, const std::string& id) {
  for (const UIElement& e : s.screen().elements) {
    if (e.id == id) return e;
  }
  throw std::out_of_range(id);
}

// 4. In SpatialNav no speech names a target outside the active selection.
void spatial_confinement(Check& c) {
  Rng rng(4001);
  const auto cases = screen_cases(rng, 58);
  std::size_t in_spatial = 0;
  std::size_t speeches = 0;
  std::int64_t t = 0;
  for (const ScreenCase& sc : cases) {
    SessionState state = initial_state(sc.scenario, sc.overlay);
    state = dispatch(Gesture{ThreeFingerDoubleTap{}, t++}, state).state;
    for (int i = 0; i < 200; ++i) {
      const Gesture g = testing::random_gesture(rng, *sc.overlay, t++);
      const SessionState before = state;
      DispatchResult r = dispatch(g, state);
      state = std::move(r.state);
      if (before.mode != Mode::SpatialNav) {
        // Re-enter so most of the run happens under SpatialNav.
        if (state.mode != Mode::SpatialNav) state = dispatch(Gesture{ThreeFingerDoubleTap{}, t++}, state).state;
        continue;
      }
      ++in_spatial;
      // Allowed speech: mode toggles, the replay register, the selection
      // announcement, and texts of targets inside the selection.
      std::set<std::string> allowed = {spatial_mode_text(false)};
      if (before.last_prompt) allowed.insert(*before.last_prompt);
      for (const SessionState* s : {&before, static_cast<const SessionState*>(&state)}) {
        if (!s->selection) continue;
        const auto ids = testing::oracle_line_of_sight(s->selection->axis, s->selection->index, *sc.scenario,
                                                       *sc.overlay);
        if (s == &state) allowed.insert(selection_announcement(s->selection->axis, s->selection->label, ids.size()));
        for (std::size_t k = 0; k < ids.size(); ++k) {
          const UIElement& e = element_by_id(*sc.scenario, ids[k]);
          allowed.insert(element_text(e));
          allowed.insert(order_announcement(k + 1, ids.size(), e));
        }
      }
      for (const std::string& text : testing::speech_texts(r.feedback)) {
        ++speeches;
        c.expect(allowed.count(text) == 1, "unexpected speech '" + text + "' after " + describe(g));
      }
      c.expect(!state.cursor || (*state.cursor >= 0 &&
                                 *state.cursor < static_cast<int>(sc.scenario->screen().elements.size())),
               "cursor out of range");
    }
  }
  c.expect(in_spatial >= 10000, "only " + std::to_string(in_spatial) + " gestures under SpatialNav");
  c.note(std::to_string(in_spatial) + " gestures under SpatialNav, " + std::to_string(speeches) + " speech events");
}

// Applies one swipe from a given cursor.
DispatchResult swipe_from(const SessionState& base, std::optional<int> cursor, SwipeDirection d) {
  SessionState s = base;
  s.cursor = cursor;
  return dispatch(Gesture{Swipe{1, d}, 0}, s);
}

bool only_thonk(const std::vector<FeedbackEvent>& fb) {
  return fb.size() == 1 && fb[0].kind == std::variant<Speech, Earcon, CancelAll>{Earcon{EarconKind::Thonk}};
}

// Checks next/prev over an ordered list of reading indexes.
void cursor_walk(Check& c, const SessionState& base, const std::vector<int>& order, const std::string& where) {
  const int n = static_cast<int>(order.size());
  for (int k = 0; k < n; ++k) {
    const int cur = order[static_cast<std::size_t>(k)];
    if (k + 1 < n) {
      const auto fwd = swipe_from(base, cur, SwipeDirection::Right);
      const auto back = swipe_from(fwd.state, fwd.state.cursor, SwipeDirection::Left);
      c.expect(fwd.state.cursor == order[static_cast<std::size_t>(k + 1)], where + " next");
      c.expect(back.state.cursor == cur, where + " prev after next");
    } else {
      const auto end = swipe_from(base, cur, SwipeDirection::Right);
      c.expect(only_thonk(end.feedback) && end.state.cursor == cur, where + " end boundary");
    }
    if (k > 0) {
      const auto bwd = swipe_from(base, cur, SwipeDirection::Left);
      const auto again = swipe_from(bwd.state, bwd.state.cursor, SwipeDirection::Right);
      c.expect(bwd.state.cursor == order[static_cast<std::size_t>(k - 1)], where + " prev");
      c.expect(again.state.cursor == cur, where + " next after prev");
    } else {
      const auto start = swipe_from(base, cur, SwipeDirection::Left);
      c.expect(only_thonk(start.feedback) && start.state.cursor == cur, where + " start boundary");
    }
  }
}

// 5. Cursor navigation invariants, default and spatial, on fixture and random screens.
void cursor_invariants(Check& c) {
  Rng rng(5001);
  const auto cases = screen_cases(rng, 100);
  std::size_t selections = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const ScreenCase& sc = cases[i];
    const SessionState idle = initial_state(sc.scenario, sc.overlay);
    std::vector<int> all(sc.scenario->screen().elements.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    cursor_walk(c, idle, all, "screen " + std::to_string(i));
    for (const Marker& m : all_markers(*sc.overlay)) {
      std::vector<int> order;
      for (const std::string& id : testing::oracle_line_of_sight(m.axis, m.index, *sc.scenario, *sc.overlay)) {
        order.push_back(element_by_id(*sc.scenario, id).reading_index);
      }
      SessionState spatial = idle;
      spatial.mode = Mode::SpatialNav;
      spatial.selection = m;
      if (order.empty()) {
        c.expect(only_thonk(swipe_from(spatial, std::nullopt, SwipeDirection::Right).feedback), "empty selection");
        continue;
      }
      cursor_walk(c, spatial, order, "screen " + std::to_string(i) + " selection " + m.label);
      ++selections;
    }
  }
  c.note(std::to_string(cases.size()) + " screens, " + std::to_string(selections) + " non-empty selections");
}

int cli(std::vector<std::string> args, std::string* err_text = nullptr) {
  args.insert(args.begin(), "tapnav");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (err_text) *err_text = err.str();
  return code;
}

struct GoldenTask {
  std::string name;
  std::string scenario;
  std::string overlay;
};

const std::vector<GoldenTask> kTasks = {{"avengers_lookup", "MoviesScatter", "DataVizCutout"},
                                        {"bank_over_50", "BankTransactions", "InterfaceBraille"}};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tapnav_acceptance_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string replay_to(const GoldenTask& task, const fs::path& out, Check& c) {
  std::string err;
  const int code = cli({"replay", "--scenario", task.scenario, "--overlay", task.overlay, "--trace",
                        kData + "/traces/" + task.name + ".trace.json", "--out", out.string()},
                       &err);
  c.expect(code == kExitOk, task.name + " replay exit " + std::to_string(code) + " " + err);
  return code == kExitOk ? read_text_file(out) : "";
}

// 6. Scripted task traces replay byte-identically and match the checked-in goldens.
void golden_transcripts(Check& c) {
  const fs::path dir = scratch("golden");
  for (const GoldenTask& task : kTasks) {
    const std::string first = replay_to(task, dir / (task.name + ".1.jsonl"), c);
    const std::string second = replay_to(task, dir / (task.name + ".2.jsonl"), c);
    c.expect(!first.empty() && first == second, task.name + " differs between runs");
    c.expect(first == read_text_file(kData + "/golden/" + task.name + ".transcript.jsonl"),
             task.name + " differs from golden");
  }
  // The tasks reach their targets.
  const Scenario movies = load_fixture(Fixture::MoviesScatter);
  const OverlayConfig cutout = builtin_overlay(BuiltinOverlay::DataVizCutout);
  for (const DataPoint& dp : movies.scatter().points) {
    if (dp.id == "avengers") {
      c.expect(testing::oracle_cell_at(project_point(dp, movies.scatter()), cutout) == GridCell{13, 24},
               "Avengers is not at row 13, column 24");
    }
  }
  const std::string avengers = read_text_file(kData + "/golden/avengers_lookup.transcript.jsonl");
  c.expect(avengers.find("\"Avengers, critic rating 9.4, audience rating 8.9\"") != std::string::npos,
           "Avengers detail missing");
  c.expect(avengers.find("\"column marker 24: ") != std::string::npos, "column 24 summary missing");
  c.expect(avengers.find("\"row marker 13: ") != std::string::npos, "row 13 summary missing");
  const std::string bank = read_text_file(kData + "/golden/bank_over_50.transcript.jsonl");
  c.expect(bank.find("\"item 11 of 16: $86.40\"") != std::string::npos, "the $86.40 transaction is not reached");
  fs::remove_all(dir);
  c.note("avengers_lookup and bank_over_50 stable across runs and equal to goldens");
}

// 7. Cancel leaves state alone and a following repeat replays the last speech.
void queue_semantics(Check& c) {
  Rng rng(7001);
  std::vector<std::pair<std::shared_ptr<const Scenario>, std::shared_ptr<const OverlayConfig>>> cases;
  for (Fixture f : {Fixture::MoviesScatter, Fixture::BankTransactions, Fixture::TutorialPdf}) {
    auto s = std::make_shared<const Scenario>(load_fixture(f));
    cases.emplace_back(s, std::make_shared<const OverlayConfig>(builtin_overlay(s->overlay_kind)));
  }
  for (int i = 0; i < 30; ++i) {
    auto o = std::make_shared<const OverlayConfig>(testing::random_overlay(rng, Orientation::Landscape));
    cases.emplace_back(std::make_shared<const Scenario>(testing::random_scenario(rng, *o, 80)), o);
  }
  std::size_t prefixes = 0;
  for (const auto& [scenario, overlay] : cases) {
    for (int trial = 0; trial < 40; ++trial) {
      SessionState state = initial_state(scenario, overlay);
      std::optional<std::string> last_speech;
      std::int64_t t = 0;
      const int len = testing::uniform_int(rng, 0, 60);
      for (int k = 0; k < len; ++k) {
        DispatchResult r = dispatch(testing::random_gesture(rng, *overlay, t++), state);
        for (const std::string& s : testing::speech_texts(r.feedback)) last_speech = s;
        state = std::move(r.state);
      }
      const DispatchResult cancel = dispatch(Gesture{Tap{2, {10, 10}}, t++}, state);
      c.expect(cancel.feedback.size() == 1 && std::holds_alternative<CancelAll>(cancel.feedback[0].kind),
               "Tap{2} did not emit exactly CancelAll");
      c.expect(!observable_change(state, cancel.state) && cancel.state.last_prompt == state.last_prompt,
               "Tap{2} changed state");
      const DispatchResult repeat = dispatch(Gesture{Tap{3, {10, 10}}, t++}, cancel.state);
      const auto texts = testing::speech_texts(repeat.feedback);
      if (last_speech) {
        c.expect(repeat.feedback.size() == 1 && texts.size() == 1 && texts[0] == *last_speech,
                 "repeat did not replay '" + *last_speech + "'");
      } else {
        c.expect(repeat.feedback.empty(), "repeat spoke with nothing to replay");
      }
      const DispatchResult again = dispatch(Gesture{Tap{3, {10, 10}}, t++}, repeat.state);
      c.expect(again.feedback == repeat.feedback || (again.feedback.size() == repeat.feedback.size() &&
                                                     testing::speech_texts(again.feedback) == texts),
               "second repeat differs");
      ++prefixes;
    }
  }
  c.note(std::to_string(prefixes) + " random prefixes");
}

// 8. Serialization identities and SVG geometry recovery.
void format_round_trips(Check& c) {
  Rng rng(8001);
  for (int i = 0; i < 500; ++i) {
    const OverlayConfig o = testing::random_overlay(rng);
    const std::string ot = serialize_overlay(o);
    c.expect(parse_overlay(ot) == o && serialize_overlay(parse_overlay(ot)) == ot, "overlay " + std::to_string(i));
    const Scenario s = testing::random_scenario(rng, o, 60);
    const std::string st = serialize_scenario(s);
    c.expect(parse_scenario(st) == s && serialize_scenario(parse_scenario(st)) == st, "scenario " + std::to_string(i));
    const auto trace = testing::random_trace(rng, 80);
    const std::string tt = serialize_trace(trace);
    c.expect(parse_trace(tt) == trace && serialize_trace(parse_trace(tt)) == tt, "trace " + std::to_string(i));
    const Transcript tr = testing::random_transcript(rng, 40);
    const std::string tx = write_transcript(tr);
    c.expect(read_transcript(tx) == tr && write_transcript(read_transcript(tx)) == tx,
             "transcript " + std::to_string(i));
  }
  std::vector<OverlayConfig> overlays = {builtin_overlay(BuiltinOverlay::DataVizCutout),
                                         builtin_overlay(BuiltinOverlay::InterfaceBraille)};
  for (int i = 0; i < 100; ++i) overlays.push_back(testing::random_overlay(rng));
  double worst = 0.0;
  for (const OverlayConfig& o : overlays) {
    const auto parsed = testing::parse_svg_markers(export_overlay_svg(o));
    const auto xs = testing::oracle_quadrant_xs(o);
    c.expect(parsed.size() == static_cast<std::size_t>(o.rows + o.cols) + xs.size(), o.name + " marker count");
    std::size_t line = 0;
    for (const auto& m : parsed) {
      Point want;
      if (m.axis == "quadrant") {
        if (line >= xs.size()) continue;
        want = {xs[line++], testing::oracle_layout(o).col_lane_cy};
      } else {
        want = testing::oracle_marker_center(m.axis == "row" ? Axis::Row : Axis::Column, m.index, o);
      }
      const double err = std::max(std::abs(m.center.x - want.x), std::abs(m.center.y - want.y));
      worst = std::max(worst, err);
      c.expect(err <= 0.01, o.name + " " + m.axis + " " + std::to_string(m.index) + " off by " + str(err));
    }
  }
  c.note("500 documents of each format, 102 SVGs, worst center error " + str(worst) + " mm");
}

std::string touch_frame(const TouchEvent& e) {
  static const char* kPhases[] = {"down", "move", "up"};
  return json{{"type", "touch"}, {"pointer_id", e.pointer_id}, {"phase", kPhases[static_cast<int>(e.phase)]},
              {"x_mm", e.pos.x}, {"y_mm", e.pos.y}, {"t_ms", e.t_ms}}
      .dump();
}

// 9. A served session fed a fixture trace records the replay transcript byte for byte.
void wire_offline_equivalence(Check& c) {
  const fs::path dir = scratch("wire");
  SessionServer server({std::nullopt, std::nullopt, dir / "record"});
  server.start("127.0.0.1", 0);
  for (const GoldenTask& task : kTasks) {
    const std::string offline = replay_to(task, dir / (task.name + ".jsonl"), c);
    const auto trace = parse_trace(read_text_file(kData + "/traces/" + task.name + ".trace.json"));
    testing::WsClient client("127.0.0.1", server.port());
    client.send(R"({"type":"hello","protocol_version":"1.0"})");
    client.send(json{{"type", "load"}, {"scenario", task.scenario}, {"overlay", task.overlay}}.dump());
    for (const TouchEvent& e : trace) client.send(touch_frame(e));
    client.send(R"({"type":"end_session"})");
    const auto frames = client.read_all();
    c.expect(!frames.empty(), task.name + " no frames");
    if (frames.empty()) continue;
    const json closed = json::parse(frames.back());
    c.expect(closed.value("type", "") == "session_closed", task.name + " did not close cleanly");
    const std::string ref = closed.value("transcript_ref", "");
    c.expect(!ref.empty() && read_text_file(ref) == offline, task.name + " served transcript differs from replay");
    // Wire feedback frames follow the transcript event order.
    std::vector<std::string> wire;
    for (const auto& f : frames) {
      const json j = json::parse(f);
      const std::string type = j["type"];
      if (type == "speak") wire.push_back("speech:" + j["text"].get<std::string>());
      if (type == "earcon") wire.push_back("earcon:" + j["kind"].get<std::string>());
      if (type == "cancel_all") wire.push_back("cancel_all");
    }
    std::vector<std::string> expected;
    for (const FeedbackEvent& e : read_transcript(offline).events) {
      if (const auto* s = std::get_if<Speech>(&e.kind)) expected.push_back("speech:" + s->text);
      else if (const auto* ec = std::get_if<Earcon>(&e.kind)) expected.push_back("earcon:" + std::string(to_string(ec->kind)));
      else expected.push_back("cancel_all");
    }
    c.expect(wire == expected, task.name + " wire order differs");
  }
  server.stop();
  fs::remove_all(dir);
  c.note("avengers_lookup and bank_over_50 over ws://127.0.0.1/session");
}

struct Criterion {
  std::string name;
  double limit_s;  // 0 when no runtime bound applies
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace tapnav::acceptance

int main() {
  using namespace tapnav::acceptance;
  const std::vector<Criterion> criteria = {
      {"overlay fidelity", 1.0, overlay_fidelity},
      {"line-of-sight oracle", 30.0, line_of_sight_oracle},
      {"gesture classification", 30.0, gesture_classification},
      {"spatial confinement fuzz", 60.0, spatial_confinement},
      {"cursor invariants", 0.0, cursor_invariants},
      {"golden task transcripts", 0.0, golden_transcripts},
      {"queue semantics", 0.0, queue_semantics},
      {"format round-trips", 0.0, format_round_trips},
      {"wire/offline equivalence", 0.0, wire_offline_equivalence},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = cr.limit_s == 0.0 || secs < cr.limit_s;
    const bool pass = error.empty() && check.ok() && in_time;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << "  " << cr.name << "  " << secs << " s";
    if (cr.limit_s > 0.0) line << " (limit " << cr.limit_s << " s)";
    line << "  " << check.checks() << " checks";
    if (!error.empty()) line << "  exception: " << error;
    if (!check.ok()) line << "  " << check.summary();
    if (!in_time) line << "  over time limit";
    if (pass) line << "  " << check.note();
    std::cout << line.str() << std::endl;
    if (!pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
