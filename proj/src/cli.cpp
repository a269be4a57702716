// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/cli.hpp"

#include <csignal>
#include <cstdlib>
#include <optional>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "tapnav/assets.hpp"
#include "tapnav/errors.hpp"
#include "tapnav/io.hpp"
#include "tapnav/prompts.hpp"
#include "tapnav/session_server.hpp"
#include "tapnav/svg.hpp"

namespace tapnav {

namespace {

void diagnostic(std::ostream& err, std::string_view source, std::string_view kind, std::string_view location,
                std::string_view message) {
  err << source << '\t' << kind << '\t' << location << '\t' << message << '\n';
}

// Maps the exception taxonomy onto exit codes, printing one line per problem.
// `source` is read when an error is caught, so callers may update it as they go.
template <class F>
int guarded(std::ostream& err, const std::string& source, F&& body) {
  try {
    return body();
  } catch (const FormatError& e) {
    for (const Violation& v : e.violations()) err << source << '\t' << v.to_line() << '\n';
    return kExitValidation;
  } catch (const IoError& e) {
    diagnostic(err, e.path().string(), "io", "-", e.what());
    return kExitIo;
  } catch (const StreamError& e) {
    diagnostic(err, source, "stream", "event " + std::to_string(e.event_index()), e.what());
    return kExitValidation;
  } catch (const DomainError& e) {
    diagnostic(err, source, "domain", "-", e.what());
    return kExitValidation;
  }
}

struct ReplayArgs {
  std::string scenario;
  std::string overlay;
  std::string trace;
  std::string out;
  std::string recognizer_config;
};

int cmd_replay(const ReplayArgs& a, std::ostream& out, std::ostream& err) {
  std::string source = a.scenario;
  return guarded(err, source, [&] {
    const Scenario scenario = load_scenario_ref(a.scenario);
    source = a.overlay.empty() ? a.scenario : a.overlay;
    const OverlayConfig overlay =
        a.overlay.empty() ? builtin_overlay(scenario.overlay_kind) : load_overlay_ref(a.overlay);
    source = a.recognizer_config;
    const RecognizerConfig cfg = a.recognizer_config.empty() ? RecognizerConfig{}
                                                             : load_recognizer_config(a.recognizer_config);
    source = a.trace;
    const std::vector<TouchEvent> trace = parse_trace(read_text_file(a.trace));
    const Transcript t = run_session(trace, scenario, overlay, cfg);
    write_text_file(a.out, write_transcript(t));

    std::size_t speech = 0, earcons = 0, cancels = 0;
    for (const FeedbackEvent& e : t.events) {
      if (std::holds_alternative<Speech>(e.kind)) ++speech;
      else if (std::holds_alternative<Earcon>(e.kind)) ++earcons;
      else ++cancels;
    }
    out << "replayed " << trace.size() << " touch events: " << t.events.size() << " feedback events (" << speech
        << " speech, " << earcons << " earcon, " << cancels << " cancel_all) -> " << a.out << '\n';
    return kExitOk;
  });
}

struct ValidateArgs {
  std::string scenario;
  std::string overlay;
  std::string trace;
  std::string transcript;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  Format format = Format::Scenario;
  std::string path = a.scenario;
  if (!a.overlay.empty()) {
    format = Format::Overlay;
    path = a.overlay;
  } else if (!a.trace.empty()) {
    format = Format::Trace;
    path = a.trace;
  } else if (!a.transcript.empty()) {
    format = Format::Transcript;
    path = a.transcript;
  }
  return guarded(err, path, [&] {
    const Document doc = parse_and_validate(read_text_file(path), format);
    out << "OK " << to_string(format) << ' ' << path;
    if (const auto* s = std::get_if<Scenario>(&doc)) {
      out << " (" << s->name << ", "
          << (s->is_scatter() ? std::to_string(s->scatter().points.size()) + " points"
                              : std::to_string(s->screen().elements.size()) + " elements")
          << ')';
    } else if (const auto* t = std::get_if<std::vector<TouchEvent>>(&doc)) {
      out << " (" << t->size() << " events)";
    } else if (const auto* tr = std::get_if<Transcript>(&doc)) {
      out << " (" << tr->events.size() << " events)";
    }
    out << '\n';
    return kExitOk;
  });
}

int cmd_overlay_svg(const std::string& ref, const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, ref, [&] {
    const OverlayConfig overlay = load_overlay_ref(ref);
    write_text_file(path, export_overlay_svg(overlay));
    out << "wrote " << all_markers(overlay).size() << " markers and " << quadrant_lines(overlay).size()
        << " quadrant lines for " << overlay.name << " -> " << path << '\n';
    return kExitOk;
  });
}

std::string mm(double v) { return format_number(v); }

int cmd_describe(const std::string& ref, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, ref, [&] {
    const OverlayConfig o = load_overlay_ref(ref);
    if (as_json) {
      out << serialize_overlay(o);
      return kExitOk;
    }
    const Rect g = grid_rect(o);
    out << o.name << '\n'
        << "  screen: " << mm(o.screen_width_mm) << " x " << mm(o.screen_height_mm) << " mm, "
        << (o.orientation == Orientation::Landscape ? "landscape" : "portrait") << '\n'
        << "  grid: " << o.rows << " rows x " << o.cols << " columns, pitch " << mm(o.pitch_mm) << " mm\n"
        << "  markers: " << all_markers(o).size() << ", " << mm(o.marker_size_mm) << " mm, style "
        << (o.marker_style == MarkerStyle::CutoutShapes     ? "cutout shapes"
            : o.marker_style == MarkerStyle::BrailleLetters ? "braille letters"
                                                            : "plain bumps")
        << '\n'
        << "  row markers: " << (o.row_axis_edge == RowAxisEdge::Left ? "left" : "right") << " edge, numbered "
        << (o.row_numbering == RowNumbering::TopDown ? "top down" : "bottom up") << '\n'
        << "  column markers: " << (o.col_axis_edge == ColAxisEdge::Top ? "top" : "bottom") << " edge\n"
        << "  quadrant lines: " << quadrant_lines(o).size() << '\n'
        << "  margin: " << mm(o.margin_mm) << " mm\n"
        << "  cell grid: x " << mm(g.x0) << ".." << mm(g.x1) << " mm, y " << mm(g.y0) << ".." << mm(g.y1)
        << " mm\n";
    return kExitOk;
  });
}

struct ServeArgs {
  int port = 0;
  std::string host = "127.0.0.1";
  std::string scenario;
  std::string overlay;
  std::string record;
};

void wait_for_signal() {
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  int sig = 0;
  sigwait(&set, &sig);
  spdlog::info("received signal {}, shutting down", sig);
}

int cmd_serve(const ServeArgs& a, std::ostream& out, std::ostream& err, const ServeHooks* hooks) {
  std::string source = a.scenario;
  return guarded(err, source, [&] {
    ServiceOptions options;
    // Fail fast on bad defaults instead of at the first load.
    if (!a.scenario.empty()) {
      load_scenario_ref(a.scenario);
      options.default_scenario = a.scenario;
    }
    if (!a.overlay.empty()) {
      source = a.overlay;
      load_overlay_ref(a.overlay);
      options.default_overlay = a.overlay;
    }
    if (!a.record.empty()) options.record_dir = a.record;

    const bool use_signals = hooks == nullptr || !hooks->wait;
    if (use_signals) {
      // Block before any thread starts so every thread inherits the mask.
      sigset_t set;
      sigemptyset(&set);
      sigaddset(&set, SIGINT);
      sigaddset(&set, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &set, nullptr);
    }
    SessionServer server(options);
    server.start(a.host, static_cast<std::uint16_t>(a.port));
    out << "serving ws://" << a.host << ':' << server.port() << kSessionPath << std::endl;
    if (hooks && hooks->on_listening) hooks->on_listening(server.port());
    if (use_signals) {
      wait_for_signal();
    } else {
      hooks->wait();
    }
    server.stop();
    return kExitOk;
  });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const ServeHooks* hooks) {
  CLI::App app{"TapNav spatiotactile screen-reader engine", "tapnav"};
  app.require_subcommand(1);

  ReplayArgs replay;
  auto* replay_cmd = app.add_subcommand("replay", "Replay a touch trace into a feedback transcript");
  replay_cmd->add_option("--scenario", replay.scenario, "Scenario builtin name or file")->required();
  replay_cmd->add_option("--overlay", replay.overlay, "Overlay builtin name or file (default: the scenario's)");
  replay_cmd->add_option("--trace", replay.trace, "Touch trace file")->required();
  replay_cmd->add_option("--out", replay.out, "Transcript output file")->required();
  replay_cmd->add_option("--recognizer-config", replay.recognizer_config, "Gesture threshold overrides (JSON)");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a document against its schema and invariants");
  auto* which = validate_cmd->add_option_group("document");
  which->add_option("--scenario", validate.scenario, "Scenario file");
  which->add_option("--overlay", validate.overlay, "Overlay file");
  which->add_option("--trace", validate.trace, "Touch trace file");
  which->add_option("--transcript", validate.transcript, "Transcript file");
  which->require_option(1);

  std::string svg_overlay, svg_out;
  auto* svg_cmd = app.add_subcommand("overlay-svg", "Export an overlay as a fabrication SVG");
  svg_cmd->add_option("--overlay", svg_overlay, "Overlay builtin name or file")->required();
  svg_cmd->add_option("--out", svg_out, "SVG output file")->required();

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve interactive sessions over WebSocket");
  serve_cmd->add_option("--port", serve.port, "TCP port")->required()->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", serve.host, "Listen address")->capture_default_str();
  serve_cmd->add_option("--scenario", serve.scenario, "Default scenario for load messages");
  serve_cmd->add_option("--overlay", serve.overlay, "Default overlay for load messages");
  serve_cmd->add_option("--record", serve.record, "Directory for session traces and transcripts");

  std::string describe_overlay;
  bool describe_json = false;
  auto* describe_cmd = app.add_subcommand("describe-overlay", "Print an overlay's layout");
  describe_cmd->add_option("--overlay", describe_overlay, "Overlay builtin name or file")->required();
  describe_cmd->add_flag("--json", describe_json, "Print the overlay document instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*replay_cmd) return cmd_replay(replay, out, err);
  if (*validate_cmd) return cmd_validate(validate, out, err);
  if (*svg_cmd) return cmd_overlay_svg(svg_overlay, svg_out, out, err);
  if (*serve_cmd) return cmd_serve(serve, out, err, hooks);
  if (*describe_cmd) return cmd_describe(describe_overlay, describe_json, out, err);
  return kExitUsage;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("tapnav");
  spdlog::set_default_logger(logger);
  const char* level = std::getenv("TAPNAV_LOG");
  spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
}

}  // namespace tapnav
