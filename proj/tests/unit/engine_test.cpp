// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "tapnav/assets.hpp"
#include "tapnav/engine.hpp"
#include "tapnav/errors.hpp"
#include "tapnav/io.hpp"
#include "tapnav/prompts.hpp"

namespace tapnav {
namespace {

using testing::count_earcons;
using testing::speech_texts;

class EngineTest : public ::testing::Test {
 protected:
  void start(Fixture f) {
    scenario_ = std::make_shared<const Scenario>(load_fixture(f));
    overlay_ = std::make_shared<const OverlayConfig>(builtin_overlay(scenario_->overlay_kind));
    state_ = initial_state(scenario_, overlay_);
  }

  std::vector<FeedbackEvent> apply(GestureKind kind) {
    DispatchResult r = dispatch(Gesture{std::move(kind), t_++}, state_);
    state_ = std::move(r.state);
    return r.feedback;
  }

  Point center(Axis axis, int index) const { return marker_center(axis, index, *overlay_); }

  std::shared_ptr<const Scenario> scenario_;
  std::shared_ptr<const OverlayConfig> overlay_;
  SessionState state_;
  std::int64_t t_ = 0;
};

TEST_F(EngineTest, ScatterAxisTapsSpeakScale) {
  start(Fixture::MoviesScatter);
  EXPECT_EQ(speech_texts(apply(Tap{1, center(Axis::Column, 3)})),
            (std::vector<std::string>{"x axis, critic rating: minimum 0, maximum 10, step 1"}));
  EXPECT_EQ(speech_texts(apply(Tap{1, center(Axis::Row, 3)})),
            (std::vector<std::string>{"y axis, audience rating: minimum 0, maximum 10, step 1"}));
  EXPECT_TRUE(apply(Tap{1, {100, 80}}).empty());
}

TEST_F(EngineTest, ScatterOverviewOnFourFingerTap) {
  start(Fixture::MoviesScatter);
  const auto texts = speech_texts(apply(Tap{4, {100, 80}}));
  ASSERT_EQ(texts.size(), 1u);
  EXPECT_EQ(texts[0].rfind("Movie ratings: 36 movies. ", 0), 0u);
}

TEST_F(EngineTest, ScatterExplorationLifecycle) {
  start(Fixture::MoviesScatter);
  const Point avengers{13.5 + 25.0 * 9.4, 153.5 - 14.0 * 8.9};
  auto fb = apply(LongPressStart{1, center(Axis::Column, 24)});
  EXPECT_EQ(state_.mode, Mode::Exploring);
  EXPECT_EQ(speech_texts(fb),
            (std::vector<std::string>{"column marker 24: four movies, critic rating 9.3 to 9.5; quadrants: 0, 2, 2"}));
  EXPECT_TRUE(apply(Hover{center(Axis::Column, 24) + Point{0.5, 0.0}}).empty());
  fb = apply(Hover{avengers});
  ASSERT_EQ(fb.size(), 2u);
  EXPECT_EQ(fb[0].kind, (std::variant<Speech, Earcon, CancelAll>{Earcon{EarconKind::DataPointCue}}));
  EXPECT_EQ(speech_texts(fb), (std::vector<std::string>{"Avengers, critic rating 9.4, audience rating 8.9"}));
  EXPECT_TRUE(apply(Hover{avengers + Point{0.2, 0.0}}).empty());
  fb = apply(LongPressEnd{avengers});
  EXPECT_EQ(speech_texts(fb), (std::vector<std::string>{"Avengers, critic rating 9.4, audience rating 8.9"}));
  EXPECT_EQ(state_.mode, Mode::Idle);
}

TEST_F(EngineTest, HoverWithoutPressIsIgnored) {
  start(Fixture::MoviesScatter);
  EXPECT_TRUE(apply(Hover{center(Axis::Column, 24)}).empty());
  EXPECT_TRUE(apply(LongPressEnd{{0, 0}}).empty());
}

TEST_F(EngineTest, ScatterIgnoresNavigationGestures) {
  start(Fixture::MoviesScatter);
  EXPECT_TRUE(apply(Swipe{1, SwipeDirection::Right}).empty());
  EXPECT_TRUE(apply(Swipe{2, SwipeDirection::Up}).empty());
  EXPECT_TRUE(apply(ThreeFingerDoubleTap{}).empty());
  EXPECT_EQ(state_.mode, Mode::Idle);
}

TEST_F(EngineTest, ScreenCursorWalkAndBoundaries) {
  start(Fixture::TutorialPdf);
  const auto& elements = scenario_->screen().elements;
  const int n = static_cast<int>(elements.size());
  auto fb = apply(Swipe{1, SwipeDirection::Left});
  EXPECT_EQ(state_.cursor, n - 1);
  EXPECT_EQ(count_earcons(fb, EarconKind::Tick), 1u);
  fb = apply(Swipe{1, SwipeDirection::Right});
  EXPECT_EQ(fb.size(), 1u);
  EXPECT_EQ(count_earcons(fb, EarconKind::Thonk), 1u);
  EXPECT_EQ(state_.cursor, n - 1);
  for (int i = 0; i < n - 1; ++i) apply(Swipe{1, SwipeDirection::Left});
  EXPECT_EQ(state_.cursor, 0);
  fb = apply(Swipe{1, SwipeDirection::Left});
  EXPECT_EQ(count_earcons(fb, EarconKind::Thonk), 1u);
  EXPECT_EQ(state_.cursor, 0);
  fb = apply(Swipe{1, SwipeDirection::Right});
  EXPECT_EQ(speech_texts(fb), (std::vector<std::string>{element_text(elements[1])}));
}

TEST_F(EngineTest, ContinuousReading) {
  start(Fixture::TutorialPdf);
  const auto& elements = scenario_->screen().elements;
  auto fb = apply(Swipe{2, SwipeDirection::Up});
  ASSERT_EQ(fb.size(), elements.size());
  EXPECT_TRUE(std::get<Speech>(fb[0].kind).interrupts);
  EXPECT_FALSE(std::get<Speech>(fb[1].kind).interrupts);
  EXPECT_EQ(state_.cursor, static_cast<int>(elements.size()) - 1);
  apply(Swipe{1, SwipeDirection::Left});
  apply(Swipe{1, SwipeDirection::Left});
  fb = apply(Swipe{2, SwipeDirection::Down});
  EXPECT_EQ(fb.size(), 3u);
}

TEST_F(EngineTest, ExploringScreenTicksOnElements) {
  start(Fixture::BankTransactions);
  const auto& back = scenario_->screen().elements[0];
  apply(LongPressStart{1, {80, 250}});
  EXPECT_EQ(state_.mode, Mode::Exploring);
  auto fb = apply(Hover{back.bounds_mm.center()});
  EXPECT_EQ(count_earcons(fb, EarconKind::Tick), 1u);
  EXPECT_EQ(speech_texts(fb), (std::vector<std::string>{"Back, button"}));
  EXPECT_EQ(state_.cursor, 0);
  fb = apply(Hover{center(Axis::Row, 1)});
  EXPECT_EQ(speech_texts(fb), (std::vector<std::string>{"row a: 3 screen elements, first Back"}));
  apply(LongPressEnd{{0, 0}});
  EXPECT_EQ(state_.mode, Mode::Idle);
}

TEST_F(EngineTest, SpatialNavSelectionAndConfinement) {
  start(Fixture::BankTransactions);
  EXPECT_EQ(speech_texts(apply(ThreeFingerDoubleTap{})), (std::vector<std::string>{"spatial navigation on"}));
  EXPECT_EQ(state_.mode, Mode::SpatialNav);
  // No selection yet: swipes only thonk.
  auto fb = apply(Swipe{1, SwipeDirection::Right});
  EXPECT_EQ(fb.size(), 1u);
  EXPECT_EQ(count_earcons(fb, EarconKind::Thonk), 1u);

  apply(LongPressStart{1, center(Axis::Row, 11)});
  EXPECT_EQ(state_.mode, Mode::SpatialNav);
  ASSERT_TRUE(state_.selection.has_value());
  EXPECT_EQ(state_.selection->label, "k");
  fb = apply(Swipe{1, SwipeDirection::Right});
  EXPECT_EQ(speech_texts(fb), (std::vector<std::string>{"item 2 of 5: Grocery Market"}));

  // Elements outside row k stay silent while hovering.
  const auto& back = scenario_->screen().elements[0];
  EXPECT_TRUE(apply(Hover{back.bounds_mm.center()}).empty());
  EXPECT_TRUE(apply(Swipe{2, SwipeDirection::Up}).empty());

  apply(LongPressEnd{{0, 0}});
  EXPECT_EQ(state_.mode, Mode::SpatialNav);
  EXPECT_EQ(speech_texts(apply(ThreeFingerDoubleTap{})), (std::vector<std::string>{"spatial navigation off"}));
  EXPECT_EQ(state_.mode, Mode::Idle);
  EXPECT_FALSE(state_.selection.has_value());
}

TEST_F(EngineTest, CancelKeepsStateAndRepeatReplays) {
  start(Fixture::BankTransactions);
  EXPECT_TRUE(apply(Tap{3, {50, 50}}).empty());
  apply(Swipe{1, SwipeDirection::Right});
  const SessionState before = state_;
  auto fb = apply(Tap{2, {50, 50}});
  ASSERT_EQ(fb.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<CancelAll>(fb[0].kind));
  EXPECT_FALSE(observable_change(before, state_));
  EXPECT_EQ(speech_texts(apply(Tap{3, {50, 50}})), (std::vector<std::string>{"Back, button"}));
  EXPECT_EQ(speech_texts(apply(Tap{3, {50, 50}})), (std::vector<std::string>{"Back, button"}));
}

TEST_F(EngineTest, UnmappedFingerCountsAreSilent) {
  start(Fixture::BankTransactions);
  EXPECT_TRUE(apply(Tap{1, {50, 50}}).empty());
  EXPECT_TRUE(apply(Tap{4, {50, 50}}).empty());
}

TEST(InitialState, RejectsIncompatibleOverlay) {
  auto bank = std::make_shared<const Scenario>(load_fixture(Fixture::BankTransactions));
  auto cutout = std::make_shared<const OverlayConfig>(builtin_overlay(BuiltinOverlay::DataVizCutout));
  EXPECT_THROW(initial_state(bank, cutout), DomainError);
  EXPECT_THROW(initial_state(nullptr, cutout), DomainError);
}

TEST(ConfigHash, StableAndSensitive) {
  const Scenario s = load_fixture(Fixture::MoviesScatter);
  const OverlayConfig o = builtin_overlay(BuiltinOverlay::DataVizCutout);
  RecognizerConfig cfg;
  const std::string h = config_hash(s, o, cfg);
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(h, config_hash(s, o, cfg));
  cfg.tap_slop_mm = 5.0;
  EXPECT_NE(h, config_hash(s, o, cfg));
}

TEST(Session, StepsMatchBatchRun) {
  const Scenario s = load_fixture(Fixture::BankTransactions);
  const OverlayConfig o = builtin_overlay(BuiltinOverlay::InterfaceBraille);
  const auto trace = parse_trace(read_text_file(TAPNAV_DATA_DIR "/traces/bank_over_50.trace.json"));
  Session session(std::make_shared<const Scenario>(s), std::make_shared<const OverlayConfig>(o));
  std::vector<FeedbackEvent> events;
  for (const TouchEvent& e : trace) {
    for (const auto& step : session.feed(e)) events.insert(events.end(), step.feedback.begin(), step.feedback.end());
  }
  for (const auto& step : session.finish()) events.insert(events.end(), step.feedback.begin(), step.feedback.end());
  const Transcript batch = run_session(trace, s, o);
  EXPECT_EQ(events, batch.events);
  EXPECT_EQ(session.transcript(), batch);
  EXPECT_EQ(session.state().mode, Mode::Idle);
}

}  // namespace
}  // namespace tapnav
