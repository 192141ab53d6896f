/*
 * Copyright 2026 The Memento Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MEMENTO_HTTP_LISTENER_HPP
#define MEMENTO_HTTP_LISTENER_HPP

#include <memory>
#include <string>

#include "memento/server.hpp"

namespace memento {

/// Binds a MementoService to a TCP socket. The serving calls block, so a
/// typical embedding runs one of them on a dedicated thread and calls
/// stop() from another; wait_until_ready() orders the two.
class HttpListener {
 public:
  /// The service must outlive the listener.
  explicit HttpListener(const MementoService& service);
  ~HttpListener();

  HttpListener(const HttpListener&) = delete;
  HttpListener& operator=(const HttpListener&) = delete;

  /// Binds an OS-chosen free port on host. Returns the port, or -1.
  int bind_ephemeral(const std::string& host);

  /// Serves on the port from bind_ephemeral until stop().
  bool serve_bound();

  /// Binds host:port and serves until stop(). False when the bind fails.
  bool serve(const std::string& host, int port);

  /// Blocks until the listening socket accepts connections, or until a
  /// failed serving call has already returned.
  void wait_until_ready() const;

  /// Whether a serving call is currently accepting connections.
  bool running() const;

  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace memento

#endif  // MEMENTO_HTTP_LISTENER_HPP
