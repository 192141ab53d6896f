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

#ifndef MEMENTO_SERVER_HPP
#define MEMENTO_SERVER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "memento/chronicle_store.hpp"

namespace memento {

enum class ErrorPageType {
  Friendly,     // errors answer 200 with the message in the body
  Traditional,  // errors answer their real 4xx status
};

enum class NegotiationPattern {
  P302,  // distinct TimeGate endpoint answering 302 (three-request flow)
  P200,  // the page negotiates at its own URI and answers 200 directly
};

/// Immutable runtime options. Loaded once at startup from a flat
/// key=value file, optionally overridden per key, then validated.
struct ServerConfig {
  int timemap_page_size = 500;
  ErrorPageType error_page_type = ErrorPageType::Friendly;
  NegotiationPattern negotiation_pattern = NegotiationPattern::P302;
  bool recommended_relations = false;

  // Namespace exclusion: with the wildcard on (the default), every title
  // with a "Prefix:" namespace is refused datetime features and only
  // unprefixed main-namespace pages take part. With it off, only the
  // prefixes listed below are refused.
  bool exclude_all_namespaces = true;
  std::vector<std::string> excluded_namespaces;

  std::string base_url = "http://localhost:8080";  // absolute, no trailing slash

  // The page URI itself answers 302 to a memento when the request carries
  // Accept-Datetime. Off by default: it defeats caching of the page URI and
  // exists to let the latency model's two-request flow be measured.
  bool experimental_pattern11 = false;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line_no, const std::string& message)
      : std::runtime_error(line_no == 0
                               ? message
                               : "line " + std::to_string(line_no) + ": " + message),
        line_no(line_no) {}

  std::size_t line_no;  // 1-based; 0 when not tied to a file line
};

/// Parses key=value lines ('#' comments and blank lines ignored) into a
/// config and validates it. Unknown keys, bad values, and inconsistent
/// combinations throw ConfigError with the offending line number.
ServerConfig parse_config(std::string_view text);

/// parse_config over a file's contents. Unreadable file → ConfigError.
ServerConfig load_config_file(const std::filesystem::path& path);

/// Applies one key=value pair (the CLI override path). Same keys and value
/// grammar as the file format. Throws ConfigError (line 0) on bad input.
/// Callers must validate_config() again after the last override.
void apply_config_override(ServerConfig& config, std::string_view key,
                           std::string_view value);

/// Cross-field checks: page size ≥ 1, base_url absolute without trailing
/// slash, experimental_pattern11 only together with the 302 pattern.
void validate_config(const ServerConfig& config);

/// The "Prefix" of a "Prefix:Rest" title, or empty for the unprefixed main
/// namespace. Only the first colon counts.
std::string_view namespace_of(std::string_view title);

/// Whether datetime features are refused for this title's namespace.
bool namespace_excluded(const ServerConfig& config, std::string_view title);

/// The request classes the service answers, one per request.
enum class ResourceKind {
  OriginalDirect,           // the page itself, latest content
  MementoDirect,            // one pinned revision (?rev=)
  TimeGate302,              // datetime negotiation answering 302
  Negotiated200,            // datetime negotiation at the page URI, 200
  TimeMapFull,              // newest page of the version map
  TimeMapPivotAscending,    // /timemap/{pivot}/1/{title}
  TimeMapPivotDescending,   // /timemap/{pivot}/-1/{title}
};

struct Route {
  ResourceKind kind = ResourceKind::OriginalDirect;
  std::string title;       // percent-decoded
  std::string rev_text;    // MementoDirect: raw ?rev= value, unvalidated
  std::string pivot_text;  // pivot kinds: raw pivot segment, unvalidated

  friend bool operator==(const Route&, const Route&) = default;
};

/// Classifies a request target (path plus optional query) under the
/// config's negotiation pattern. has_accept_datetime steers page URIs to
/// negotiation under the 200 pattern and the experimental 302-at-page-URI
/// mode. nullopt means no such resource.
std::optional<Route> route(const ServerConfig& config, std::string_view target,
                           bool has_accept_datetime);

/// The transport-independent slice of an HTTP request the service needs.
struct RequestView {
  std::string method = "GET";
  std::string target = "/";  // raw path with optional ?query
  std::optional<std::string> accept_datetime;
};

/// A fully decided response: status, headers in emission order, body.
struct ResponseSpec {
  int status = 200;
  std::vector<std::pair<std::string, std::string>> headers;
  std::string content_type;  // empty together with an empty body
  std::string body;

  friend bool operator==(const ResponseSpec&, const ResponseSpec&) = default;

  /// First header with this name, ASCII case-insensitive.
  std::optional<std::string> header(std::string_view name) const;
};

enum class ErrorKind {
  BadRequest400,
  Forbidden403,
  NotFound404,
  Internal500,
};

/// Renders one error condition under the given mode. Traditional keeps the
/// real status with a short plain body. Friendly answers 200 and moves the
/// code into an X-Memento-Error header plus a marker line in the body, so
/// machine clients can still detect the failure.
ResponseSpec render_error(ErrorKind kind, std::string_view detail,
                          ErrorPageType mode);

/// The HTTP service core: routes and answers requests against an immutable
/// store. Pure and thread-safe; every response is a function of (store,
/// config, request). Transport binding lives in HttpListener.
class MementoService {
 public:
  /// Both references must outlive the service.
  MementoService(const Store& store, ServerConfig config);

  const ServerConfig& config() const { return config_; }

  ResponseSpec handle(const RequestView& request) const;

 private:
  ResponseSpec original(const std::string& title) const;
  ResponseSpec memento(const std::string& title, const std::string& rev_text) const;
  ResponseSpec timegate(const std::string& title,
                        const std::optional<std::string>& accept_datetime) const;
  ResponseSpec negotiated(const std::string& title,
                          const std::string& accept_datetime) const;
  ResponseSpec timemap(ResourceKind kind, const std::string& title,
                       const std::string& pivot_text) const;
  ResponseSpec usage() const;

  ResponseSpec fail(ErrorKind kind, std::string_view detail) const;
  std::optional<ResponseSpec> page_gate(const std::string& title) const;

  const Store* store_;
  ServerConfig config_;
};

}  // namespace memento

#endif  // MEMENTO_SERVER_HPP
