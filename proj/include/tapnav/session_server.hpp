// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "tapnav/session_handler.hpp"

namespace tapnav {

inline constexpr std::string_view kSessionPath = "/session";

/// WebSocket front end for SessionHandler. Serves the protocol on
/// ws://host:port/session, one thread per connection, so each session's
/// messages are handled strictly in arrival order and sessions share nothing.
class SessionServer {
 public:
  explicit SessionServer(ServiceOptions options);
  ~SessionServer();
  SessionServer(const SessionServer&) = delete;
  SessionServer& operator=(const SessionServer&) = delete;

  /// Binds and starts accepting in the background. Port 0 picks a free
  /// port. Throws IoError when the address cannot be bound.
  void start(const std::string& address, std::uint16_t port);
  /// Bound port; valid after start().
  std::uint16_t port() const;
  /// Stops accepting, drops open connections and joins all threads.
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tapnav
