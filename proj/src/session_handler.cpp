// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/session_handler.hpp"

#include <spdlog/spdlog.h>

#include "json.hpp"
#include "tapnav/assets.hpp"
#include "tapnav/errors.hpp"
#include "tapnav/io.hpp"

namespace tapnav {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

// Thrown inside message handling for a reply of type error.
struct ProtocolFailure {
  std::string code;
  std::string message;
};

[[noreturn]] void fail(std::string code, std::string message) {
  throw ProtocolFailure{std::move(code), std::move(message)};
}

Scenario resolve_scenario(const json& v) {
  if (v.is_string()) return load_scenario_ref(v.get<std::string>());
  if (v.is_object()) return parse_scenario(v.dump());
  fail("load", "scenario must be a name, a path or an inline scenario document");
}

OverlayConfig resolve_overlay(const json& v) {
  if (v.is_string()) return load_overlay_ref(v.get<std::string>());
  if (v.is_object()) return parse_overlay(v.dump());
  fail("load", "overlay must be a name, a path or an inline overlay document");
}

std::string feedback_frame(const FeedbackEvent& e) {
  ojson j;
  if (const auto* s = std::get_if<Speech>(&e.kind)) {
    j["type"] = "speak";
    j["text"] = s->text;
    j["interrupts"] = s->interrupts;
  } else if (const auto* ec = std::get_if<Earcon>(&e.kind)) {
    j["type"] = "earcon";
    j["kind"] = to_string(ec->kind);
  } else {
    j["type"] = "cancel_all";
  }
  j["t_ms"] = e.t_ms;
  return j.dump();
}

std::string state_frame(const Session::Step& s) {
  ojson j;
  j["type"] = "state";
  j["mode"] = to_string(s.mode);
  if (s.cursor) j["cursor_index"] = *s.cursor;
  if (s.selection) {
    j["selection"] = {{"axis", to_string(s.selection->axis)},
                      {"index", s.selection->index},
                      {"label", s.selection->label}};
  }
  return j.dump();
}


Phase parse_phase(const std::string& s) {
  if (s == "down") return Phase::Down;
  if (s == "move") return Phase::Move;
  if (s == "up") return Phase::Up;
  fail("protocol", "unknown touch phase '" + s + "'");
}

TouchEvent parse_touch(const json& m) {
  try {
    TouchEvent e;
    e.pointer_id = m.at("pointer_id").get<int>();
    e.phase = parse_phase(m.at("phase").get<std::string>());
    e.pos = {m.at("x_mm").get<double>(), m.at("y_mm").get<double>()};
    if (!m.at("t_ms").is_number_integer()) fail("protocol", "t_ms must be an integer");
    e.t_ms = m.at("t_ms").get<std::int64_t>();
    return e;
  } catch (const json::exception& ex) {
    fail("protocol", std::string("malformed touch message: ") + ex.what());
  }
}

}  // namespace

SessionHandler::SessionHandler(std::string session_id, ServiceOptions options)
    : id_(std::move(session_id)), options_(std::move(options)) {}

std::optional<Transcript> SessionHandler::transcript() const {
  if (!session_) return std::nullopt;
  return session_->transcript();
}

SessionHandler::Reply SessionHandler::on_message(std::string_view frame) {
  if (phase_ == Phase::Closed) return {{}, true};
  try {
    return handle(frame);
  } catch (const ProtocolFailure& f) {
    return error(f.code, f.message, true);
  } catch (const StreamError& e) {
    return error("stream", e.what(), true, e.event_index());
  }
}

SessionHandler::Reply SessionHandler::handle(std::string_view frame) {
  json m;
  try {
    m = json::parse(frame.begin(), frame.end());
  } catch (const json::parse_error& e) {
    fail("parse", e.what());
  }
  if (!m.is_object() || !m.contains("type") || !m["type"].is_string()) {
    fail("protocol", "message must be an object with a string 'type'");
  }
  const std::string type = m["type"].get<std::string>();
  Reply reply;

  if (type == "hello") {
    if (phase_ != Phase::AwaitHello) fail("protocol", "hello sent twice");
    const auto v = m.find("protocol_version");
    if (v == m.end() || !v->is_string()) fail("protocol", "hello needs a protocol_version string");
    const std::string version = v->get<std::string>();
    int major = -1;
    try {
      major = std::stoi(version.substr(0, version.find('.')));
    } catch (...) {
    }
    if (major != kProtocolMajorVersion) {
      fail("version", "unsupported protocol version '" + version + "', server speaks " +
                          std::string(kProtocolVersion));
    }
    phase_ = Phase::Ready;
    reply.frames.push_back(ojson{{"type", "ready"}, {"session_id", id_}}.dump());
    return reply;
  }
  if (phase_ == Phase::AwaitHello) fail("protocol", "the first message must be hello");

  if (type == "load") {
    if (phase_ == Phase::Loaded) fail("protocol", "a scenario is already loaded");
    try {
      json scenario_ref = m.value("scenario", json());
      json overlay_ref = m.value("overlay", json());
      if (scenario_ref.is_null() && options_.default_scenario) scenario_ref = *options_.default_scenario;
      if (overlay_ref.is_null() && options_.default_overlay) overlay_ref = *options_.default_overlay;
      if (scenario_ref.is_null()) fail("load", "no scenario given and the server has no default");
      auto scenario = std::make_shared<const Scenario>(resolve_scenario(scenario_ref));
      std::shared_ptr<const OverlayConfig> overlay;
      if (overlay_ref.is_null()) {
        overlay = std::make_shared<const OverlayConfig>(builtin_overlay(scenario->overlay_kind));
      } else {
        overlay = std::make_shared<const OverlayConfig>(resolve_overlay(overlay_ref));
      }
      RecognizerConfig cfg;
      if (const auto rc = m.find("recognizer_config"); rc != m.end() && !rc->is_null()) {
        cfg = parse_recognizer_config(rc->dump());
      }
      session_ = std::make_unique<Session>(scenario, overlay, cfg);
    } catch (const FormatError& e) {
      fail("load", e.what());
    } catch (const IoError& e) {
      fail("load", e.what());
    } catch (const DomainError& e) {
      fail("load", e.what());
    }
    phase_ = Phase::Loaded;
    spdlog::debug("session {}: loaded {}", id_, session_->transcript().meta.scenario);
    return reply;
  }

  if (type == "touch") {
    if (phase_ != Phase::Loaded) fail("not_loaded", "load a scenario before sending touches");
    const TouchEvent e = parse_touch(m);
    const auto steps = session_->feed(e);
    trace_.push_back(e);
    emit_steps(steps, reply);
    return reply;
  }

  if (type == "end_session") {
    if (session_) {
      try {
        emit_steps(session_->finish(), reply);
      } catch (const StreamError& e) {
        reply.frames.push_back(error("stream", e.what(), false, e.event_index()).frames.front());
      }
    }
    const auto ref = record();
    ojson closed{{"type", "session_closed"}};
    if (ref) closed["transcript_ref"] = ref->string();
    reply.frames.push_back(closed.dump());
    reply.close = true;
    phase_ = Phase::Closed;
    return reply;
  }

  fail("protocol", "unknown message type '" + type + "'");
}

void SessionHandler::on_disconnect() {
  if (phase_ == Phase::Closed) return;
  if (session_) {
    try {
      session_->finish();
    } catch (const StreamError&) {
      // Pointers still down at disconnect; keep what was decided so far.
    }
  }
  record();
  phase_ = Phase::Closed;
}

SessionHandler::Reply SessionHandler::error(std::string_view code, const std::string& message, bool close,
                                            std::optional<std::size_t> event_index) {
  ojson j{{"type", "error"}, {"code", code}, {"message", message}};
  if (event_index) j["event_index"] = *event_index;
  Reply reply;
  reply.frames.push_back(j.dump());
  if (close) {
    spdlog::info("session {}: closing after {} error: {}", id_, code, message);
    record();
    phase_ = Phase::Closed;
    reply.close = true;
  }
  return reply;
}

void SessionHandler::emit_steps(const std::vector<Session::Step>& steps, Reply& reply) const {
  for (const Session::Step& step : steps) {
    for (const FeedbackEvent& e : step.feedback) reply.frames.push_back(feedback_frame(e));
    if (step.state_changed) reply.frames.push_back(state_frame(step));
  }
}

std::optional<std::filesystem::path> SessionHandler::record() {
  if (!options_.record_dir || !session_) return std::nullopt;
  const auto dir = *options_.record_dir;
  const auto transcript_path = dir / (id_ + ".transcript.jsonl");
  if (recorded_) return transcript_path;
  recorded_ = true;
  try {
    std::filesystem::create_directories(dir);
    write_text_file(dir / (id_ + ".trace.json"), serialize_trace(trace_));
    write_text_file(transcript_path, write_transcript(session_->transcript()));
  } catch (const std::exception& e) {
    spdlog::error("session {}: recording failed: {}", id_, e.what());
    return std::nullopt;
  }
  return transcript_path;
}

}  // namespace tapnav
