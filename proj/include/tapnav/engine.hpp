// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tapnav/gesture.hpp"
#include "tapnav/overlay.hpp"
#include "tapnav/scenario.hpp"

namespace tapnav {

enum class Mode { Idle, Exploring, SpatialNav };
enum class EarconKind { Tick, Thonk, DataPointCue };

struct Speech {
  std::string text;
  bool interrupts = true;
  friend bool operator==(const Speech&, const Speech&) = default;
};
struct Earcon {
  EarconKind kind = EarconKind::Tick;
  friend bool operator==(const Earcon&, const Earcon&) = default;
};
struct CancelAll {
  friend bool operator==(const CancelAll&, const CancelAll&) = default;
};

struct FeedbackEvent {
  std::variant<Speech, Earcon, CancelAll> kind;
  std::int64_t t_ms = 0;

  friend bool operator==(const FeedbackEvent&, const FeedbackEvent&) = default;
};

struct TranscriptMeta {
  std::string scenario;
  std::string overlay;
  std::string config_hash;
  friend bool operator==(const TranscriptMeta&, const TranscriptMeta&) = default;
};

struct Transcript {
  TranscriptMeta meta;
  std::vector<FeedbackEvent> events;
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

struct SessionState {
  std::shared_ptr<const Scenario> scenario;
  std::shared_ptr<const OverlayConfig> overlay;
  Mode mode = Mode::Idle;
  std::optional<Marker> selection;  // only under SpatialNav
  std::optional<int> cursor;        // reading index
  std::optional<std::string> last_prompt;
  std::optional<std::string> hover_focus;
  std::set<std::string> explored_set;
  bool spatial_nav_available = false;
  bool pressing = false;  // a long press is being held
};

/// Validates compatibility and builds the idle starting state.
SessionState initial_state(std::shared_ptr<const Scenario> scenario, std::shared_ptr<const OverlayConfig> overlay);

struct DispatchResult {
  SessionState state;
  std::vector<FeedbackEvent> feedback;
};

/// Pure transition: applies one gesture to a state and returns the next state
/// with the feedback it produced. Unmapped gestures are silent no-ops.
DispatchResult dispatch(const Gesture& gesture, SessionState state);

/// True when the two states differ in mode, cursor or selection.
bool observable_change(const SessionState& before, const SessionState& after);

std::string config_hash(const Scenario& scenario, const OverlayConfig& overlay, const RecognizerConfig& cfg);
TranscriptMeta transcript_meta(const Scenario& scenario, const OverlayConfig& overlay, const RecognizerConfig& cfg);

/// recognize + fold dispatch from the initial state.
Transcript run_session(std::span<const TouchEvent> trace, const Scenario& scenario, const OverlayConfig& overlay,
                       const RecognizerConfig& cfg = {});

/// Stateful wrapper used by live sessions: events in, feedback out.
class Session {
 public:
  Session(std::shared_ptr<const Scenario> scenario, std::shared_ptr<const OverlayConfig> overlay,
          RecognizerConfig cfg = {});

  struct Step {
    std::vector<FeedbackEvent> feedback;
    bool state_changed = false;
    // Observable state right after this step.
    Mode mode = Mode::Idle;
    std::optional<int> cursor;
    std::optional<Marker> selection;
  };

  /// Feeds one touch event; returns one step per gesture it completed.
  std::vector<Step> feed(const TouchEvent& event);
  /// Ends the touch stream and dispatches any withheld gestures.
  std::vector<Step> finish();

  const SessionState& state() const { return state_; }
  const Transcript& transcript() const { return transcript_; }

 private:
  std::vector<Step> apply(const std::vector<Gesture>& gestures);

  GestureRecognizer recognizer_;
  SessionState state_;
  Transcript transcript_;
};

std::string_view to_string(Mode mode);
std::string_view to_string(EarconKind kind);

}  // namespace tapnav
