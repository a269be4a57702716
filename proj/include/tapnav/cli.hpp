// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <ostream>

namespace tapnav {

enum ExitStatus : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Lets tests drive `serve` without signals. `on_listening` receives the
/// bound port; `wait` blocks until the server should stop. By default the
/// command waits for SIGINT or SIGTERM.
struct ServeHooks {
  std::function<void(std::uint16_t port)> on_listening;
  std::function<void()> wait;
};

/// Runs one command line. Summaries go to `out`; diagnostics go to `err`, one
/// per line as tab-separated fields: source, kind, location, message.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const ServeHooks* hooks = nullptr);

/// Sends logs to stderr at the level named by TAPNAV_LOG (default "warn").
void configure_logging();

}  // namespace tapnav
