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

#include "memento/server.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <variant>

#include "memento/datetime.hpp"
#include "memento/linkrel.hpp"
#include "memento/negotiator.hpp"

namespace memento {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  return text;
}

bool parse_bool(std::string_view value, std::size_t line_no, std::string_view key) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ConfigError(line_no, std::string(key) + " must be 'true' or 'false', got '" +
                                 std::string(value) + "'");
}

void apply_pair(ServerConfig& config, std::string_view key, std::string_view value,
                std::size_t line_no) {
  if (key == "timemap_page_size") {
    int size = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), size);
    if (ec != std::errc() || ptr != value.data() + value.size() || size < 1) {
      throw ConfigError(line_no, "timemap_page_size must be a positive integer, got '" +
                                     std::string(value) + "'");
    }
    config.timemap_page_size = size;
  } else if (key == "error_page_type") {
    if (value == "friendly") {
      config.error_page_type = ErrorPageType::Friendly;
    } else if (value == "traditional") {
      config.error_page_type = ErrorPageType::Traditional;
    } else {
      throw ConfigError(line_no, "error_page_type must be 'friendly' or 'traditional', got '" +
                                     std::string(value) + "'");
    }
  } else if (key == "negotiation_pattern") {
    if (value == "302") {
      config.negotiation_pattern = NegotiationPattern::P302;
    } else if (value == "200") {
      config.negotiation_pattern = NegotiationPattern::P200;
    } else {
      throw ConfigError(line_no, "negotiation_pattern must be '302' or '200', got '" +
                                     std::string(value) + "'");
    }
  } else if (key == "recommended_relations") {
    config.recommended_relations = parse_bool(value, line_no, key);
  } else if (key == "experimental_pattern11") {
    config.experimental_pattern11 = parse_bool(value, line_no, key);
  } else if (key == "excluded_namespaces") {
    if (value == "*") {
      config.exclude_all_namespaces = true;
      config.excluded_namespaces.clear();
      return;
    }
    config.exclude_all_namespaces = false;
    config.excluded_namespaces.clear();
    if (value.empty()) return;
    std::size_t start = 0;
    for (;;) {
      auto comma = value.find(',', start);
      std::string_view token =
          trim(comma == std::string_view::npos ? value.substr(start)
                                               : value.substr(start, comma - start));
      if (token.empty()) {
        throw ConfigError(line_no, "excluded_namespaces has an empty entry");
      }
      if (token.find(':') != std::string_view::npos) {
        throw ConfigError(line_no, "namespace prefixes must not contain ':', got '" +
                                       std::string(token) + "'");
      }
      if (token.find('*') != std::string_view::npos) {
        throw ConfigError(line_no, "'*' must stand alone in excluded_namespaces");
      }
      config.excluded_namespaces.emplace_back(token);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else if (key == "base_url") {
    std::string url(value);
    while (!url.empty() && url.back() == '/') url.pop_back();
    config.base_url = url;
  } else {
    throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
  }
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Lenient: a '%' that is not followed by two hex digits stays literal.
std::string percent_decode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '%' && i + 2 < text.size()) {
      int hi = hex_digit(text[i + 1]);
      int lo = hex_digit(text[i + 2]);
      if (hi >= 0 && lo >= 0) {
        out.push_back(static_cast<char>(hi * 16 + lo));
        i += 2;
        continue;
      }
    }
    out.push_back(text[i]);
  }
  return out;
}

bool path_safe(unsigned char c) {
  if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
    return true;
  }
  switch (c) {
    case '-': case '.': case '_': case '~':
    case '!': case '$': case '&': case '\'': case '(': case ')':
    case '*': case '+': case ',': case ';': case '=':
    case ':': case '@': case '/':
      return true;
    default:
      return false;
  }
}

// Minimal escaping for titles inside a URI path. '/' stays raw so subpage
// style titles keep their shape; route() captures the whole tail anyway.
std::string encode_path_segment(std::string_view raw) {
  static const char* const kHex = "0123456789ABCDEF";
  std::string out;
  out.reserve(raw.size());
  for (unsigned char c : raw) {
    if (path_safe(c)) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

// The tail after "prefix/", "" for the bare prefix, nullopt otherwise.
std::optional<std::string_view> tail_of(std::string_view path, std::string_view prefix) {
  if (path == prefix) return std::string_view{};
  if (path.size() > prefix.size() && path.substr(0, prefix.size()) == prefix &&
      path[prefix.size()] == '/') {
    return path.substr(prefix.size() + 1);
  }
  return std::nullopt;
}

// Last occurrence wins, matching common query string semantics.
std::optional<std::string> query_param(std::string_view query, std::string_view name) {
  std::optional<std::string> found;
  std::size_t start = 0;
  while (start < query.size() || (start == 0 && !query.empty())) {
    auto amp = query.find('&', start);
    std::string_view pair = amp == std::string_view::npos ? query.substr(start)
                                                          : query.substr(start, amp - start);
    auto eq = pair.find('=');
    std::string_view key = eq == std::string_view::npos ? pair : pair.substr(0, eq);
    if (key == name) {
      found = percent_decode(eq == std::string_view::npos ? std::string_view{}
                                                          : pair.substr(eq + 1));
    }
    if (amp == std::string_view::npos) break;
    start = amp + 1;
  }
  return found;
}

std::string page_uri(const ServerConfig& config, std::string_view title) {
  return config.base_url + "/wiki/" + encode_path_segment(title);
}

std::string memento_uri(const ServerConfig& config, std::string_view title,
                        std::int64_t rev_id) {
  return page_uri(config, title) + "?rev=" + std::to_string(rev_id);
}

std::string timegate_uri(const ServerConfig& config, std::string_view title) {
  return config.base_url + "/timegate/" + encode_path_segment(title);
}

std::string timemap_uri(const ServerConfig& config, std::string_view title) {
  return config.base_url + "/timemap/" + encode_path_segment(title);
}

std::string timemap_pivot_uri(const ServerConfig& config, std::string_view title,
                              Instant pivot, bool ascending) {
  return config.base_url + "/timemap/" + format_pivot(pivot) +
         (ascending ? "/1/" : "/-1/") + encode_path_segment(title);
}

LinkEntry original_entry(const ServerConfig& config, std::string_view title,
                         bool combined_timegate) {
  LinkEntry entry;
  entry.target = page_uri(config, title);
  entry.rels = {"original", "latest-version"};
  if (combined_timegate) entry.rels.emplace_back("timegate");
  return entry;
}

LinkEntry timegate_entry(const ServerConfig& config, std::string_view title) {
  LinkEntry entry;
  entry.target = timegate_uri(config, title);
  entry.rels = {"timegate"};
  return entry;
}

LinkEntry timemap_entry(const ServerConfig& config, std::string_view title) {
  LinkEntry entry;
  entry.target = timemap_uri(config, title);
  entry.rels = {"timemap"};
  entry.attributes = {{"type", "application/link-format"}};
  return entry;
}

// First and last memento links for clients that cannot afford a TimeMap
// fetch. One merged entry when the history has a single revision.
void append_endpoint_entries(std::vector<LinkEntry>& entries, const ServerConfig& config,
                             const PageHistory& history) {
  if (!config.recommended_relations) return;
  const Revision& first = history.first();
  const Revision& last = history.last();
  LinkEntry head;
  head.target = memento_uri(config, history.title, first.rev_id);
  head.rels = {"memento", "first"};
  if (first.rev_id == last.rev_id) {
    head.rels.emplace_back("last");
    head.attributes = {{"datetime", format_http_datetime(first.timestamp)}};
    entries.push_back(std::move(head));
    return;
  }
  head.attributes = {{"datetime", format_http_datetime(first.timestamp)}};
  entries.push_back(std::move(head));
  LinkEntry tail;
  tail.target = memento_uri(config, history.title, last.rev_id);
  tail.rels = {"memento", "last"};
  tail.attributes = {{"datetime", format_http_datetime(last.timestamp)}};
  entries.push_back(std::move(tail));
}

struct ErrorText {
  int code;
  const char* reason;
};

ErrorText error_text(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadRequest400: return {400, "Bad Request"};
    case ErrorKind::Forbidden403: return {403, "Forbidden"};
    case ErrorKind::NotFound404: return {404, "Not Found"};
    case ErrorKind::Internal500: break;
  }
  return {500, "Internal Server Error"};
}

}  // namespace

ServerConfig parse_config(std::string_view text) {
  ServerConfig config;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto newline = text.find('\n', start);
    std::string_view line = newline == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, newline - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(line_no, "expected key=value, got '" + std::string(line) + "'");
      }
      std::string_view key = trim(line.substr(0, eq));
      std::string_view value = trim(line.substr(eq + 1));
      if (key.empty()) throw ConfigError(line_no, "missing key before '='");
      apply_pair(config, key, value, line_no);
    }
    if (newline == std::string_view::npos) break;
    start = newline + 1;
  }
  validate_config(config);
  return config;
}

ServerConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError(0, "cannot read config file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void apply_config_override(ServerConfig& config, std::string_view key,
                           std::string_view value) {
  apply_pair(config, trim(key), trim(value), 0);
}

void validate_config(const ServerConfig& config) {
  if (config.timemap_page_size < 1) {
    throw ConfigError(0, "timemap_page_size must be a positive integer");
  }
  const std::string& url = config.base_url;
  auto scheme_end = url.find("://");
  bool absolute = scheme_end != std::string::npos && scheme_end + 3 < url.size();
  if (absolute) {
    std::string_view scheme = std::string_view(url).substr(0, scheme_end);
    absolute = scheme == "http" || scheme == "https";
  }
  if (!absolute) {
    throw ConfigError(0, "base_url must be an absolute http(s) URL, got '" + url + "'");
  }
  if (url.back() == '/') {
    throw ConfigError(0, "base_url must not end with '/'");
  }
  if (config.experimental_pattern11 &&
      config.negotiation_pattern != NegotiationPattern::P302) {
    throw ConfigError(0, "experimental_pattern11 requires negotiation_pattern=302");
  }
}

std::string_view namespace_of(std::string_view title) {
  auto colon = title.find(':');
  if (colon == std::string_view::npos) return {};
  return title.substr(0, colon);
}

bool namespace_excluded(const ServerConfig& config, std::string_view title) {
  std::string_view ns = namespace_of(title);
  if (ns.empty()) return false;
  if (config.exclude_all_namespaces) return true;
  return std::find(config.excluded_namespaces.begin(), config.excluded_namespaces.end(),
                   ns) != config.excluded_namespaces.end();
}

std::optional<Route> route(const ServerConfig& config, std::string_view target,
                           bool has_accept_datetime) {
  auto fragment = target.find('#');
  if (fragment != std::string_view::npos) target = target.substr(0, fragment);
  auto question = target.find('?');
  std::string_view path =
      question == std::string_view::npos ? target : target.substr(0, question);
  std::string_view query =
      question == std::string_view::npos ? std::string_view{} : target.substr(question + 1);

  if (auto tail = tail_of(path, "/wiki")) {
    Route r;
    r.title = percent_decode(*tail);
    if (auto rev = query_param(query, "rev")) {
      r.kind = ResourceKind::MementoDirect;
      r.rev_text = *rev;
      return r;
    }
    if (has_accept_datetime && !r.title.empty()) {
      if (config.negotiation_pattern == NegotiationPattern::P200) {
        r.kind = ResourceKind::Negotiated200;
        return r;
      }
      if (config.experimental_pattern11) {
        r.kind = ResourceKind::TimeGate302;
        return r;
      }
    }
    r.kind = ResourceKind::OriginalDirect;
    return r;
  }

  if (auto tail = tail_of(path, "/timegate")) {
    Route r;
    r.kind = ResourceKind::TimeGate302;
    r.title = percent_decode(*tail);
    return r;
  }

  if (auto tail = tail_of(path, "/timemap")) {
    auto first_slash = tail->find('/');
    if (first_slash != std::string_view::npos) {
      std::string_view pivot = tail->substr(0, first_slash);
      std::string_view rest = tail->substr(first_slash + 1);
      auto second_slash = rest.find('/');
      if (second_slash != std::string_view::npos) {
        std::string_view direction = rest.substr(0, second_slash);
        if (direction == "-1" || direction == "1") {
          Route r;
          r.kind = direction == "1" ? ResourceKind::TimeMapPivotAscending
                                    : ResourceKind::TimeMapPivotDescending;
          r.title = percent_decode(rest.substr(second_slash + 1));
          r.pivot_text = std::string(pivot);
          return r;
        }
      }
    }
    Route r;
    r.kind = ResourceKind::TimeMapFull;
    r.title = percent_decode(*tail);
    return r;
  }

  return std::nullopt;
}

std::optional<std::string> ResponseSpec::header(std::string_view name) const {
  auto lower = [](char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  };
  for (const auto& [key, value] : headers) {
    if (key.size() != name.size()) continue;
    bool equal = true;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (lower(key[i]) != lower(name[i])) {
        equal = false;
        break;
      }
    }
    if (equal) return value;
  }
  return std::nullopt;
}

ResponseSpec render_error(ErrorKind kind, std::string_view detail, ErrorPageType mode) {
  auto [code, reason] = error_text(kind);
  ResponseSpec response;
  response.content_type = "text/plain";
  if (mode == ErrorPageType::Traditional) {
    response.status = code;
    response.body = std::to_string(code) + " " + reason + ": " + std::string(detail) + "\n";
    return response;
  }
  // Friendly pages answer 200 so browsers render the explanation instead of
  // an error screen; the real code travels in X-Memento-Error (header and
  // body marker) for machine clients.
  response.status = 200;
  response.headers.emplace_back("X-Memento-Error", std::to_string(code));
  response.body = "This wiki cannot satisfy the request: " + std::string(detail) +
                  "\n\nX-Memento-Error: " + std::to_string(code) + " " + reason + "\n";
  return response;
}

MementoService::MementoService(const Store& store, ServerConfig config)
    : store_(&store), config_(std::move(config)) {
  validate_config(config_);
}

ResponseSpec MementoService::handle(const RequestView& request) const {
  if (request.method != "GET" && request.method != "HEAD") {
    ResponseSpec response;
    response.status = 405;
    response.headers.emplace_back("Allow", "GET, HEAD");
    response.content_type = "text/plain";
    response.body = "405 Method Not Allowed: only GET and HEAD are served\n";
    return response;
  }
  auto parsed = route(config_, request.target, request.accept_datetime.has_value());
  if (!parsed) {
    return fail(ErrorKind::NotFound404, "no resource at '" + request.target + "'");
  }
  switch (parsed->kind) {
    case ResourceKind::OriginalDirect:
      return original(parsed->title);
    case ResourceKind::MementoDirect:
      return memento(parsed->title, parsed->rev_text);
    case ResourceKind::TimeGate302:
      return timegate(parsed->title, request.accept_datetime);
    case ResourceKind::Negotiated200:
      // route() only picks this kind when the header is present.
      return negotiated(parsed->title, *request.accept_datetime);
    case ResourceKind::TimeMapFull:
    case ResourceKind::TimeMapPivotAscending:
    case ResourceKind::TimeMapPivotDescending:
      return timemap(parsed->kind, parsed->title, parsed->pivot_text);
  }
  return fail(ErrorKind::Internal500, "unroutable request");
}

ResponseSpec MementoService::fail(ErrorKind kind, std::string_view detail) const {
  return render_error(kind, detail, config_.error_page_type);
}

// Shared refusal order for every resource kind: exclusion beats existence.
std::optional<ResponseSpec> MementoService::page_gate(const std::string& title) const {
  if (namespace_excluded(config_, title)) {
    return fail(ErrorKind::Forbidden403, "datetime features are disabled for the '" +
                                             std::string(namespace_of(title)) +
                                             "' namespace");
  }
  if (store_->find_history(title) == nullptr) {
    return fail(ErrorKind::NotFound404, "no page named '" + title + "'");
  }
  return std::nullopt;
}

ResponseSpec MementoService::original(const std::string& title) const {
  if (auto gate = page_gate(title)) return *gate;
  const PageHistory& history = *store_->find_history(title);
  const Revision& latest = history.last();

  std::vector<LinkEntry> links;
  if (config_.negotiation_pattern == NegotiationPattern::P200) {
    links.push_back(timemap_entry(config_, title));
    links.push_back(original_entry(config_, title, true));
  } else {
    links.push_back(original_entry(config_, title, false));
    links.push_back(timegate_entry(config_, title));
    links.push_back(timemap_entry(config_, title));
  }
  append_endpoint_entries(links, config_, history);

  ResponseSpec response;
  response.headers.emplace_back("Link", render_link_header(links));
  if (config_.negotiation_pattern == NegotiationPattern::P200) {
    // The page URI negotiates under this pattern, so caches must key on the
    // header even when this particular request did not send one.
    response.headers.emplace_back("Vary", "Accept-Datetime");
  }
  response.content_type = latest.content_type;
  response.body = latest.content;
  return response;
}

ResponseSpec MementoService::memento(const std::string& title,
                                     const std::string& rev_text) const {
  if (auto gate = page_gate(title)) return *gate;
  std::int64_t rev_id = 0;
  auto [ptr, ec] = std::from_chars(rev_text.data(), rev_text.data() + rev_text.size(), rev_id);
  if (rev_text.empty() || ec != std::errc() ||
      ptr != rev_text.data() + rev_text.size() || rev_id < 0) {
    return fail(ErrorKind::BadRequest400,
                "rev must be a non-negative integer, got '" + rev_text + "'");
  }
  const Revision* rev = store_->find_revision(title, rev_id);
  if (rev == nullptr) {
    return fail(ErrorKind::NotFound404,
                "page '" + title + "' has no revision " + std::to_string(rev_id));
  }
  const PageHistory& history = *store_->find_history(title);

  std::vector<LinkEntry> links;
  if (config_.negotiation_pattern == NegotiationPattern::P200) {
    links.push_back(original_entry(config_, title, true));
    links.push_back(timemap_entry(config_, title));
  } else {
    links.push_back(original_entry(config_, title, false));
    links.push_back(timegate_entry(config_, title));
    links.push_back(timemap_entry(config_, title));
  }
  append_endpoint_entries(links, config_, history);

  ResponseSpec response;
  response.headers.emplace_back("Memento-Datetime", format_http_datetime(rev->timestamp));
  response.headers.emplace_back("Link", render_link_header(links));
  response.content_type = rev->content_type;
  response.body = rev->content;
  return response;
}

ResponseSpec MementoService::timegate(
    const std::string& title, const std::optional<std::string>& accept_datetime) const {
  if (title.empty()) return usage();
  if (auto gate = page_gate(title)) return *gate;
  const PageHistory& history = *store_->find_history(title);

  TargetDatetime target;
  if (accept_datetime) {
    auto parsed = parse_http_datetime(*accept_datetime);
    if (auto* error = std::get_if<DatetimeError>(&parsed)) {
      return fail(ErrorKind::BadRequest400,
                  *error == DatetimeError::ImpossibleDate
                      ? "Accept-Datetime names an impossible calendar date: '" +
                            *accept_datetime + "'"
                      : "Accept-Datetime is not a valid HTTP datetime: '" +
                            *accept_datetime + "'");
    }
    target = std::get<TargetDatetime>(parsed);
  } else {
    // No preference expressed; send the reader to the newest memento.
    target = now_target();
  }

  NegotiationResult result = negotiate(history, target);

  std::vector<LinkEntry> links;
  links.push_back(timemap_entry(config_, title));
  links.push_back(original_entry(config_, title, false));
  append_endpoint_entries(links, config_, history);

  ResponseSpec response;
  response.status = 302;
  response.headers.emplace_back("Vary", "Accept-Datetime");
  response.headers.emplace_back("Location",
                                memento_uri(config_, title, result.selected->rev_id));
  // A 302 picked from a datetime must never be replayed from a cache.
  response.headers.emplace_back("Cache-Control", "no-store");
  response.headers.emplace_back("Link", render_link_header(links));
  return response;
}

ResponseSpec MementoService::negotiated(const std::string& title,
                                        const std::string& accept_datetime) const {
  if (auto gate = page_gate(title)) return *gate;
  const PageHistory& history = *store_->find_history(title);

  auto parsed = parse_http_datetime(accept_datetime);
  if (auto* error = std::get_if<DatetimeError>(&parsed)) {
    return fail(ErrorKind::BadRequest400,
                *error == DatetimeError::ImpossibleDate
                    ? "Accept-Datetime names an impossible calendar date: '" +
                          accept_datetime + "'"
                    : "Accept-Datetime is not a valid HTTP datetime: '" +
                          accept_datetime + "'");
  }
  NegotiationResult result = negotiate(history, std::get<TargetDatetime>(parsed));
  const Revision& rev = *result.selected;

  std::vector<LinkEntry> links;
  links.push_back(timemap_entry(config_, title));
  links.push_back(original_entry(config_, title, true));
  append_endpoint_entries(links, config_, history);

  ResponseSpec response;
  response.headers.emplace_back("Memento-Datetime", format_http_datetime(rev.timestamp));
  response.headers.emplace_back("Content-Location",
                                memento_uri(config_, title, rev.rev_id));
  response.headers.emplace_back("Link", render_link_header(links));
  response.headers.emplace_back("Vary", "Accept-Datetime");
  response.content_type = rev.content_type;
  response.body = rev.content;
  return response;
}

ResponseSpec MementoService::timemap(ResourceKind kind, const std::string& title,
                                     const std::string& pivot_text) const {
  if (auto gate = page_gate(title)) return *gate;
  const PageHistory& history = *store_->find_history(title);
  const auto size = static_cast<std::size_t>(config_.timemap_page_size);

  std::vector<Revision> window;
  std::string self;
  if (kind == ResourceKind::TimeMapFull) {
    window = *store_->latest_window(title, size);
    self = timemap_uri(config_, title);
  } else {
    auto parsed = parse_pivot(pivot_text);
    if (auto* error = std::get_if<DatetimeError>(&parsed)) {
      return fail(ErrorKind::BadRequest400,
                  *error == DatetimeError::ImpossibleDate
                      ? "pivot names an impossible calendar date: '" + pivot_text + "'"
                      : "pivot is not a 14-digit datetime: '" + pivot_text + "'");
    }
    Instant pivot = std::get<TargetDatetime>(parsed).instant;
    bool ascending = kind == ResourceKind::TimeMapPivotAscending;
    window = ascending ? *store_->range_after(title, pivot, size)
                       : *store_->range_before(title, pivot, size);
    if (window.empty()) {
      return fail(ErrorKind::NotFound404,
                  "page '" + title + "' has no mementos " +
                      (ascending ? "after " : "before ") + format_http_datetime(pivot));
    }
    self = timemap_pivot_uri(config_, title, pivot, ascending);
  }

  TimeMapPage page;
  page.title = title;
  page.from = window.front().timestamp;
  page.until = window.back().timestamp;
  page.mementos.reserve(window.size());
  for (const Revision& rev : window) {
    page.mementos.push_back({rev.rev_id, rev.timestamp, memento_uri(config_, title, rev.rev_id)});
  }
  // Neighbor pages pivot on this page's endpoints; their from/until let
  // clients skip pages whose range they do not need.
  auto older = *store_->range_before(title, page.from, size);
  if (!older.empty()) {
    page.prev = TimeMapNeighbor{page.from, timemap_pivot_uri(config_, title, page.from, false),
                                older.front().timestamp, older.back().timestamp};
  }
  auto newer = *store_->range_after(title, page.until, size);
  if (!newer.empty()) {
    page.next = TimeMapNeighbor{page.until, timemap_pivot_uri(config_, title, page.until, true),
                                newer.front().timestamp, newer.back().timestamp};
  }
  page.self_uri = self;
  page.timegate_uri = timegate_uri(config_, title);
  page.original_uri = page_uri(config_, title);
  page.recommended_relations = config_.recommended_relations;
  page.contains_first = window.front().rev_id == history.first().rev_id;
  page.contains_last = window.back().rev_id == history.last().rev_id;

  ResponseSpec response;
  response.content_type = "application/link-format";
  response.body = render_timemap(page);
  return response;
}

ResponseSpec MementoService::usage() const {
  ResponseSpec response;
  response.content_type = "text/plain";
  response.body =
      "TimeGate usage\n"
      "\n"
      "GET /timegate/{title} negotiates a datetime over the page's history.\n"
      "Send an Accept-Datetime header (RFC 1123, e.g. 'Thu, 30 Jun 2011 00:00:00 GMT')\n"
      "to be redirected to the memento in force at that moment; without the\n"
      "header the newest memento is chosen. Version maps live at /timemap/{title}.\n";
  return response;
}

}  // namespace memento
