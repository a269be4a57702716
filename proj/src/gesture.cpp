// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/gesture.hpp"

#include <algorithm>
#include <cmath>

namespace tapnav {

std::vector<std::string> recognizer_config_violations(const RecognizerConfig& c) {
  std::vector<std::string> v;
  auto positive = [&](auto value, const char* field) {
    if (!(value > 0)) v.push_back(std::string(field) + " must be positive");
  };
  positive(c.tap_max_duration_ms, "tap_max_duration_ms");
  positive(c.long_press_min_ms, "long_press_min_ms");
  positive(c.multi_finger_window_ms, "multi_finger_window_ms");
  positive(c.double_tap_window_ms, "double_tap_window_ms");
  positive(c.tap_slop_mm, "tap_slop_mm");
  positive(c.swipe_min_dist_mm, "swipe_min_dist_mm");
  positive(c.swipe_max_duration_ms, "swipe_max_duration_ms");
  if (c.tap_max_duration_ms >= c.long_press_min_ms) {
    v.emplace_back("tap_max_duration_ms must be smaller than long_press_min_ms");
  }
  return v;
}

GestureRecognizer::GestureRecognizer(RecognizerConfig cfg) : cfg_(cfg) {}

GestureRecognizer::Pointer* GestureRecognizer::find_active(int pointer_id) {
  if (!seg_) return nullptr;
  for (Pointer& p : seg_->pointers) {
    if (p.active && p.id == pointer_id) return &p;
  }
  return nullptr;
}

Point GestureRecognizer::active_centroid() const {
  Point sum;
  int n = 0;
  for (const Pointer& p : seg_->pointers) {
    if (!p.active) continue;
    sum = sum + p.pos;
    ++n;
  }
  return n == 0 ? sum : sum * (1.0 / n);
}

void GestureRecognizer::flush_pending(std::vector<Gesture>& out) {
  if (pending_) {
    out.push_back(pending_->tap);
    pending_.reset();
  }
}

void GestureRecognizer::emit(Gesture g, std::vector<Gesture>& out) {
  flush_pending(out);
  out.push_back(std::move(g));
}

void GestureRecognizer::advance_to(std::int64_t t, std::vector<Gesture>& out) {
  if (seg_ && !seg_->long_press && !seg_->lifted_any && seg_->pointers.size() <= 2 &&
      t - seg_->t0 >= cfg_.long_press_min_ms) {
    const bool still = std::all_of(seg_->pointers.begin(), seg_->pointers.end(), [&](const Pointer& p) {
      return p.max_displacement < cfg_.tap_slop_mm;
    });
    if (still) {
      seg_->long_press = true;
      const int fingers = static_cast<int>(seg_->pointers.size());
      emit(Gesture{LongPressStart{fingers, active_centroid()}, seg_->t0 + cfg_.long_press_min_ms}, out);
    }
  }
  if (pending_ && t - pending_->first_down > cfg_.double_tap_window_ms) {
    // A segment that began inside the window may still complete the double tap.
    const bool candidate_open = seg_ && seg_->t0 - pending_->first_down <= cfg_.double_tap_window_ms;
    if (!candidate_open) flush_pending(out);
  }
}

std::vector<Gesture> GestureRecognizer::feed(const TouchEvent& e) {
  const std::size_t index = index_;
  if (last_t_ && e.t_ms < *last_t_) {
    throw StreamError(index, "timestamp " + std::to_string(e.t_ms) + " ms precedes previous " +
                                 std::to_string(*last_t_) + " ms");
  }
  Pointer* existing = find_active(e.pointer_id);
  if (e.phase == Phase::Down && existing) {
    throw StreamError(index, "pointer " + std::to_string(e.pointer_id) + " is already down");
  }
  if (e.phase != Phase::Down && !existing) {
    throw StreamError(index, std::string(e.phase == Phase::Up ? "up" : "move") + " for pointer " +
                                 std::to_string(e.pointer_id) + " without a matching down");
  }
  ++index_;
  last_t_ = e.t_ms;

  std::vector<Gesture> out;
  advance_to(e.t_ms, out);

  switch (e.phase) {
    case Phase::Down: {
      if (!seg_) seg_ = Segment{e.t_ms, {}, false, false};
      seg_->pointers.push_back(Pointer{e.pointer_id, e.pos, e.pos, e.t_ms, 0.0, true, index});
      break;
    }
    case Phase::Move: {
      Pointer* p = find_active(e.pointer_id);
      p->pos = e.pos;
      p->max_displacement = std::max(p->max_displacement, distance(p->down_pos, e.pos));
      if (seg_->long_press) emit(Gesture{Hover{active_centroid()}, e.t_ms}, out);
      break;
    }
    case Phase::Up: {
      Pointer* p = find_active(e.pointer_id);
      p->pos = e.pos;
      p->max_displacement = std::max(p->max_displacement, distance(p->down_pos, e.pos));
      p->active = false;
      seg_->lifted_any = true;
      const bool all_up = std::none_of(seg_->pointers.begin(), seg_->pointers.end(),
                                       [](const Pointer& q) { return q.active; });
      if (all_up) end_segment(e, out);
      break;
    }
  }
  return out;
}

void GestureRecognizer::end_segment(const TouchEvent& up, std::vector<Gesture>& out) {
  Segment seg = std::move(*seg_);
  seg_.reset();
  if (seg.long_press) {
    emit(Gesture{LongPressEnd{up.pos}, up.t_ms}, out);
    return;
  }
  std::optional<Gesture> g = classify(seg, up.t_ms);
  const Tap* tap = g ? std::get_if<Tap>(&g->kind) : nullptr;
  if (tap && tap->fingers == 3) {
    if (pending_ && seg.t0 - pending_->first_down <= cfg_.double_tap_window_ms) {
      pending_.reset();
      out.push_back(Gesture{ThreeFingerDoubleTap{}, up.t_ms});
    } else {
      flush_pending(out);
      pending_ = PendingTripleTap{seg.t0, *g};
    }
    return;
  }
  if (g) {
    emit(std::move(*g), out);
  } else {
    flush_pending(out);
  }
}

std::optional<Gesture> GestureRecognizer::classify(const Segment& seg, std::int64_t t_end) const {
  const int n = static_cast<int>(seg.pointers.size());
  const std::int64_t duration = t_end - seg.t0;
  const bool downs_together = std::all_of(seg.pointers.begin(), seg.pointers.end(), [&](const Pointer& p) {
    return p.down_t - seg.t0 <= cfg_.multi_finger_window_ms;
  });
  if (!downs_together) return std::nullopt;

  const bool still = std::all_of(seg.pointers.begin(), seg.pointers.end(),
                                 [&](const Pointer& p) { return p.max_displacement < cfg_.tap_slop_mm; });
  if (still && n >= 1 && n <= 4 && duration <= cfg_.tap_max_duration_ms) {
    Point c;
    for (const Pointer& p : seg.pointers) c = c + p.down_pos;
    return Gesture{Tap{n, c * (1.0 / n)}, t_end};
  }

  if (n >= 1 && n <= 2 && duration <= cfg_.swipe_max_duration_ms) {
    Point d;
    for (const Pointer& p : seg.pointers) d = d + (p.pos - p.down_pos);
    d = d * (1.0 / n);
    if (std::hypot(d.x, d.y) >= cfg_.swipe_min_dist_mm) {
      const bool horizontal = std::abs(d.x) >= std::abs(d.y);
      if (n == 1 && horizontal) {
        return Gesture{Swipe{1, d.x > 0 ? SwipeDirection::Right : SwipeDirection::Left}, t_end};
      }
      if (n == 2 && !horizontal) {
        return Gesture{Swipe{2, d.y < 0 ? SwipeDirection::Up : SwipeDirection::Down}, t_end};
      }
    }
  }
  return std::nullopt;
}

std::vector<Gesture> GestureRecognizer::finish() {
  if (seg_) {
    for (const Pointer& p : seg_->pointers) {
      if (p.active) {
        throw StreamError(p.down_index, "pointer " + std::to_string(p.id) + " is never lifted");
      }
    }
  }
  std::vector<Gesture> out;
  flush_pending(out);
  return out;
}

std::vector<Gesture> recognize(std::span<const TouchEvent> stream, const RecognizerConfig& cfg) {
  GestureRecognizer r(cfg);
  std::vector<Gesture> out;
  for (const TouchEvent& e : stream) {
    std::vector<Gesture> g = r.feed(e);
    out.insert(out.end(), g.begin(), g.end());
  }
  std::vector<Gesture> tail = r.finish();
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::string_view to_string(SwipeDirection d) {
  switch (d) {
    case SwipeDirection::Left: return "left";
    case SwipeDirection::Right: return "right";
    case SwipeDirection::Up: return "up";
    case SwipeDirection::Down: return "down";
  }
  return "?";
}

std::string describe(const Gesture& g) {
  struct Visitor {
    std::string operator()(const Tap& t) const { return "Tap{" + std::to_string(t.fingers) + "}"; }
    std::string operator()(const LongPressStart& l) const {
      return "LongPressStart{" + std::to_string(l.fingers) + "}";
    }
    std::string operator()(const Hover&) const { return "Hover"; }
    std::string operator()(const LongPressEnd&) const { return "LongPressEnd"; }
    std::string operator()(const Swipe& s) const {
      return "Swipe{" + std::to_string(s.fingers) + "," + std::string(to_string(s.direction)) + "}";
    }
    std::string operator()(const ThreeFingerDoubleTap&) const { return "ThreeFingerDoubleTap"; }
  };
  return std::visit(Visitor{}, g.kind) + "@" + std::to_string(g.t_ms);
}

}  // namespace tapnav
