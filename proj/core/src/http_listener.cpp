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

#include "memento/http_listener.hpp"

#include "httplib.h"

namespace memento {

struct HttpListener::Impl {
  explicit Impl(const MementoService& bound) : service(&bound) {
    auto answer = [this](const httplib::Request& req, httplib::Response& res) {
      respond(req, res);
    };
    // One catch-all per method class; the service does its own routing.
    // HEAD rides the Get registration.
    server.Get(".*", answer);
    server.Post(".*", answer);
    server.Put(".*", answer);
    server.Patch(".*", answer);
    server.Delete(".*", answer);
    server.Options(".*", answer);
  }

  void respond(const httplib::Request& req, httplib::Response& res) const {
    RequestView view;
    view.method = req.method;
    view.target = req.target;  // raw path plus query, before any decoding
    if (req.has_header("Accept-Datetime")) {
      view.accept_datetime = req.get_header_value("Accept-Datetime");
    }
    ResponseSpec spec = service->handle(view);
    res.status = spec.status;
    for (const auto& [name, value] : spec.headers) {
      res.set_header(name, value);
    }
    if (!spec.body.empty()) {
      res.set_content(spec.body, spec.content_type.empty() ? "text/plain" : spec.content_type);
    }
  }

  const MementoService* service;
  httplib::Server server;
};

HttpListener::HttpListener(const MementoService& service)
    : impl_(std::make_unique<Impl>(service)) {}

HttpListener::~HttpListener() { stop(); }

int HttpListener::bind_ephemeral(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpListener::serve_bound() { return impl_->server.listen_after_bind(); }

bool HttpListener::serve(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

void HttpListener::wait_until_ready() const { impl_->server.wait_until_ready(); }

bool HttpListener::running() const { return impl_->server.is_running(); }

void HttpListener::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace memento
