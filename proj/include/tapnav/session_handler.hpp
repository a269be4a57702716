// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tapnav/engine.hpp"

namespace tapnav {

inline constexpr std::string_view kProtocolVersion = "1.0";
inline constexpr int kProtocolMajorVersion = 1;

struct ServiceOptions {
  // Used when a load message omits the field.
  std::optional<std::string> default_scenario;
  std::optional<std::string> default_overlay;
  // When set, each session's trace and transcript are written here.
  std::optional<std::filesystem::path> record_dir;
};

/// Transport-independent protocol state machine for one connection. Takes
/// client text frames and returns the server frames to send back, in order.
class SessionHandler {
 public:
  SessionHandler(std::string session_id, ServiceOptions options);

  struct Reply {
    std::vector<std::string> frames;
    bool close = false;  // the connection should be closed after sending
  };

  Reply on_message(std::string_view frame);
  /// The peer went away without end_session. Finalizes the recording.
  void on_disconnect();

  const std::string& session_id() const { return id_; }
  bool closed() const { return phase_ == Phase::Closed; }
  /// Received touch events, in arrival order.
  const std::vector<TouchEvent>& trace() const { return trace_; }
  /// Engine transcript so far; empty until a load succeeded.
  std::optional<Transcript> transcript() const;

 private:
  enum class Phase { AwaitHello, Ready, Loaded, Closed };

  Reply handle(std::string_view frame);
  Reply error(std::string_view code, const std::string& message, bool close,
              std::optional<std::size_t> event_index = std::nullopt);
  void emit_steps(const std::vector<Session::Step>& steps, Reply& reply) const;
  std::optional<std::filesystem::path> record();

  std::string id_;
  ServiceOptions options_;
  Phase phase_ = Phase::AwaitHello;
  std::unique_ptr<Session> session_;
  std::vector<TouchEvent> trace_;
  bool recorded_ = false;
};

}  // namespace tapnav
