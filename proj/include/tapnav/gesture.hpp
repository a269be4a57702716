// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tapnav/geometry.hpp"

namespace tapnav {

enum class Phase { Down, Move, Up };

struct TouchEvent {
  int pointer_id = 0;
  Phase phase = Phase::Down;
  Point pos;
  std::int64_t t_ms = 0;

  friend bool operator==(const TouchEvent&, const TouchEvent&) = default;
};

enum class SwipeDirection { Left, Right, Up, Down };

struct Tap {
  int fingers = 1;
  Point pos;
  friend bool operator==(const Tap&, const Tap&) = default;
};
struct LongPressStart {
  int fingers = 1;
  Point pos;
  friend bool operator==(const LongPressStart&, const LongPressStart&) = default;
};
struct Hover {
  Point pos;
  friend bool operator==(const Hover&, const Hover&) = default;
};
struct LongPressEnd {
  Point pos;
  friend bool operator==(const LongPressEnd&, const LongPressEnd&) = default;
};
struct Swipe {
  int fingers = 1;
  SwipeDirection direction = SwipeDirection::Right;
  friend bool operator==(const Swipe&, const Swipe&) = default;
};
struct ThreeFingerDoubleTap {
  friend bool operator==(const ThreeFingerDoubleTap&, const ThreeFingerDoubleTap&) = default;
};

using GestureKind = std::variant<Tap, LongPressStart, Hover, LongPressEnd, Swipe, ThreeFingerDoubleTap>;

struct Gesture {
  GestureKind kind;
  std::int64_t t_ms = 0;

  friend bool operator==(const Gesture&, const Gesture&) = default;
};

/// Timing and distance thresholds. All values are engine choices; the
/// gestures themselves are fixed.
struct RecognizerConfig {
  std::int64_t tap_max_duration_ms = 300;
  std::int64_t long_press_min_ms = 500;
  std::int64_t multi_finger_window_ms = 150;
  std::int64_t double_tap_window_ms = 400;
  double tap_slop_mm = 4.0;
  double swipe_min_dist_mm = 10.0;
  std::int64_t swipe_max_duration_ms = 350;

  friend bool operator==(const RecognizerConfig&, const RecognizerConfig&) = default;
};

std::vector<std::string> recognizer_config_violations(const RecognizerConfig& cfg);

/// Malformed touch stream. `event_index` is the 0-based position of the
/// offending event in the stream.
class StreamError : public std::runtime_error {
 public:
  StreamError(std::size_t event_index, const std::string& what)
      : std::runtime_error("touch event " + std::to_string(event_index) + ": " + what),
        event_index_(event_index) {}

  std::size_t event_index() const { return event_index_; }

 private:
  std::size_t event_index_;
};

/// Incremental gesture recognizer: one instance per session, fed events in
/// stream order. Gestures are returned as soon as they are decided; a lone
/// three-finger tap is withheld until the double-tap window has passed.
class GestureRecognizer {
 public:
  explicit GestureRecognizer(RecognizerConfig cfg = {});

  /// Consumes one event and returns the gestures it completes.
  /// Throws StreamError on a malformed stream.
  std::vector<Gesture> feed(const TouchEvent& event);

  /// Ends the stream, flushing any withheld gesture. Throws StreamError if a
  /// pointer is still down.
  std::vector<Gesture> finish();

  const RecognizerConfig& config() const { return cfg_; }
  std::size_t events_seen() const { return index_; }

 private:
  struct Pointer {
    int id = 0;
    Point down_pos;
    Point pos;
    std::int64_t down_t = 0;
    double max_displacement = 0.0;
    bool active = true;
    std::size_t down_index = 0;
  };
  struct Segment {
    std::int64_t t0 = 0;
    std::vector<Pointer> pointers;
    bool long_press = false;
    bool lifted_any = false;
  };
  struct PendingTripleTap {
    std::int64_t first_down = 0;
    Gesture tap;
  };

  void advance_to(std::int64_t t, std::vector<Gesture>& out);
  void end_segment(const TouchEvent& up, std::vector<Gesture>& out);
  std::optional<Gesture> classify(const Segment& seg, std::int64_t t_end) const;
  void flush_pending(std::vector<Gesture>& out);
  void emit(Gesture g, std::vector<Gesture>& out);
  Pointer* find_active(int pointer_id);
  Point active_centroid() const;

  RecognizerConfig cfg_;
  std::optional<Segment> seg_;
  std::optional<PendingTripleTap> pending_;
  std::optional<std::int64_t> last_t_;
  std::size_t index_ = 0;
};

/// Batch form: feeds the whole stream and finishes it.
std::vector<Gesture> recognize(std::span<const TouchEvent> stream, const RecognizerConfig& cfg = {});

std::string_view to_string(SwipeDirection d);
std::string describe(const Gesture& g);

}  // namespace tapnav
