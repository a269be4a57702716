// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/session_server.hpp"

#include <sys/socket.h>

#include <atomic>
#include <boost/asio/ip/tcp.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <cstdio>
#include <list>
#include <mutex>
#include <thread>

#include <spdlog/spdlog.h>

#include "tapnav/assets.hpp"

namespace tapnav {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

struct SessionServer::Impl {
  struct Connection {
    std::thread thread;
    std::atomic<bool> done{false};
    int fd = -1;
  };

  explicit Impl(ServiceOptions o) : options(std::move(o)), acceptor(ioc) {}

  void accept_loop();
  void serve(tcp::socket socket, const std::string& id);
  void reap();

  ServiceOptions options;
  asio::io_context ioc;
  tcp::acceptor acceptor;
  std::thread accept_thread;
  std::atomic<bool> stopping{false};
  std::mutex mu;
  std::list<Connection> connections;
  std::uint64_t next_id = 1;
  std::uint16_t port = 0;
  bool started = false;
};

void SessionServer::Impl::reap() {
  std::lock_guard lock(mu);
  for (auto it = connections.begin(); it != connections.end();) {
    if (it->done) {
      it->thread.join();
      it = connections.erase(it);
    } else {
      ++it;
    }
  }
}

void SessionServer::Impl::accept_loop() {
  while (!stopping) {
    tcp::socket socket(ioc);
    beast::error_code ec;
    acceptor.accept(socket, ec);
    if (ec) {
      if (stopping) break;
      spdlog::warn("accept failed: {}", ec.message());
      continue;
    }
    reap();
    char id[32];
    std::lock_guard lock(mu);
    // stop() may have run between accept() and here.
    if (stopping) break;
    std::snprintf(id, sizeof id, "session-%04llu", static_cast<unsigned long long>(next_id++));
    Connection& c = connections.emplace_back();
    c.fd = socket.native_handle();
    c.thread = std::thread([this, &c, s = std::move(socket), sid = std::string(id)]() mutable {
      serve(std::move(s), sid);
      c.done = true;
    });
  }
}

void SessionServer::Impl::serve(tcp::socket socket, const std::string& id) {
  beast::error_code ec;
  beast::flat_buffer buffer;
  http::request<http::string_body> req;
  http::read(socket, buffer, req, ec);
  if (ec) return;
  if (!websocket::is_upgrade(req) || std::string_view(req.target().data(), req.target().size()) != kSessionPath) {
    http::response<http::string_body> res{http::status::not_found, req.version()};
    res.set(http::field::content_type, "text/plain");
    res.body() = "websocket endpoint is " + std::string(kSessionPath) + "\n";
    res.prepare_payload();
    http::write(socket, res, ec);
    socket.shutdown(tcp::socket::shutdown_both, ec);
    return;
  }

  websocket::stream<tcp::socket> ws(std::move(socket));
  ws.accept(req, ec);
  if (ec) return;
  ws.text(true);
  spdlog::info("{}: connected", id);

  SessionHandler handler(id, options);
  for (;;) {
    beast::flat_buffer frame;
    ws.read(frame, ec);
    if (ec) {
      handler.on_disconnect();
      spdlog::info("{}: disconnected ({})", id, ec.message());
      return;
    }
    const SessionHandler::Reply reply = handler.on_message(beast::buffers_to_string(frame.data()));
    for (const std::string& out : reply.frames) {
      ws.write(asio::buffer(out), ec);
      if (ec) break;
    }
    if (ec) {
      handler.on_disconnect();
      return;
    }
    if (reply.close) {
      ws.close(websocket::close_code::normal, ec);
      spdlog::info("{}: closed", id);
      return;
    }
  }
}

SessionServer::SessionServer(ServiceOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}

SessionServer::~SessionServer() { stop(); }

void SessionServer::start(const std::string& address, std::uint16_t port) {
  beast::error_code ec;
  const auto addr = asio::ip::make_address(address, ec);
  if (ec) throw IoError(address, "invalid listen address: " + ec.message());
  const tcp::endpoint endpoint(addr, port);
  Impl& s = *impl_;
  s.acceptor.open(endpoint.protocol(), ec);
  if (!ec) s.acceptor.set_option(asio::socket_base::reuse_address(true), ec);
  if (!ec) s.acceptor.bind(endpoint, ec);
  if (!ec) s.acceptor.listen(asio::socket_base::max_listen_connections, ec);
  if (ec) throw IoError(address + ":" + std::to_string(port), "cannot listen: " + ec.message());
  s.port = s.acceptor.local_endpoint().port();
  s.started = true;
  s.accept_thread = std::thread([&s] { s.accept_loop(); });
  spdlog::info("serving ws://{}:{}{}", address, s.port, kSessionPath);
}

std::uint16_t SessionServer::port() const { return impl_->port; }

void SessionServer::stop() {
  Impl& s = *impl_;
  if (!s.started || s.stopping.exchange(true)) return;
  // shutdown() wakes the blocking accept and reads on Linux.
  ::shutdown(s.acceptor.native_handle(), SHUT_RDWR);
  {
    std::lock_guard lock(s.mu);
    for (auto& c : s.connections) {
      if (!c.done) ::shutdown(c.fd, SHUT_RDWR);
    }
  }
  if (s.accept_thread.joinable()) s.accept_thread.join();
  for (auto& c : s.connections) {
    if (c.thread.joinable()) c.thread.join();
  }
  s.connections.clear();
  beast::error_code ec;
  s.acceptor.close(ec);
}

}  // namespace tapnav
