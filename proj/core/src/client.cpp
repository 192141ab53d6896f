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

#include "memento/client.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "httplib.h"
#include "memento/linkrel.hpp"

#include "http_support.hpp"

namespace memento {

namespace {

/// The walker refuses to fetch more pages than this; a conforming server's
/// neighbor graph converges long before, so running past it means the
/// server keeps minting fresh page URIs in a loop.
constexpr int kWalkPageBudget = 10000;

struct Reply {
  int status = 0;
  std::string body;
  httplib::Headers headers;

  std::string header(const std::string& name) const {
    auto it = headers.find(name);
    return it == headers.end() ? std::string() : it->second;
  }
  bool has_header(const std::string& name) const {
    return headers.find(name) != headers.end();
  }
};

/// One GET, no redirect following; the caller decides what each hop means.
Reply fetch(const std::string& url,
            const std::optional<std::string>& accept_datetime) {
  auto split = detail::split_url(url);
  if (!split) {
    throw ClientError(ClientError::Kind::Unreachable,
                      "not an absolute http(s) URL: '" + url + "'");
  }
  httplib::Client client(split->origin);
  client.set_follow_location(false);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(10, 0);

  httplib::Headers headers;
  if (accept_datetime) headers.emplace("Accept-Datetime", *accept_datetime);
  httplib::Result result = client.Get(split->target, headers);
  if (!result) {
    throw ClientError(ClientError::Kind::Unreachable,
                      "cannot reach " + url + ": " +
                          httplib::to_string(result.error()));
  }
  return Reply{result->status, result->body, result->headers};
}

/// Joins every Link header on the reply; RFC 8288 allows the field to be
/// split, and a comma join restores the single-field form.
std::string link_field(const Reply& reply) {
  std::string joined;
  auto [begin, end] = reply.headers.equal_range("Link");
  for (auto it = begin; it != end; ++it) {
    if (!joined.empty()) joined += ", ";
    joined += it->second;
  }
  return joined;
}

/// Entries of the reply's Link header; unparsable headers count as empty,
/// which the callers report as a missing relation.
std::vector<LinkEntry> link_entries(const Reply& reply) {
  std::string field = link_field(reply);
  if (field.empty()) return {};
  try {
    return parse_link(field);
  } catch (const LinkSyntaxError&) {
    return {};
  }
}

std::optional<std::string> rel_target(const std::vector<LinkEntry>& entries,
                                      std::string_view rel) {
  for (const LinkEntry& entry : entries) {
    if (entry.has_rel(rel)) return entry.target;
  }
  return std::nullopt;
}

std::optional<Instant> parse_instant(const std::string& text) {
  auto parsed = parse_http_datetime(text);
  if (std::holds_alternative<DatetimeError>(parsed)) return std::nullopt;
  return std::get<TargetDatetime>(parsed).instant;
}

/// Resolves a possibly origin-relative URI against the URL it came from.
std::string resolve_against(const std::string& base_url,
                            const std::string& reference) {
  auto split = detail::split_url(base_url);
  if (split) {
    if (auto resolved = detail::resolve_location(split->origin, reference)) {
      return *resolved;
    }
  }
  return reference;
}

bool is_link_format(const Reply& reply) {
  std::string content_type = reply.header("Content-Type");
  return content_type.rfind("application/link-format", 0) == 0;
}

/// ASCII case-insensitive containment, for header token scans.
bool contains_token(std::string_view haystack, std::string_view needle) {
  auto lower = [](std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    return out;
  };
  return lower(haystack).find(lower(needle)) != std::string::npos;
}

}  // namespace

NegotiationOutcome cmd_negotiate(const std::string& url,
                                 const std::string& datetime) {
  NegotiationOutcome outcome;
  Reply page = fetch(url, std::nullopt);
  ++outcome.requests;
  if (page.status != 200) {
    throw ClientError(ClientError::Kind::NegotiationFailed,
                      "page answered HTTP " + std::to_string(page.status),
                      page.status);
  }
  std::optional<std::string> gate = rel_target(link_entries(page), "timegate");
  if (!gate) {
    throw ClientError(ClientError::Kind::NoTimeGateAdvertised,
                      "no timegate relation advertised by " + url);
  }
  std::string gate_uri = resolve_against(url, *gate);

  Reply gate_reply = fetch(gate_uri, datetime);
  ++outcome.requests;

  if (gate_reply.status == 302) {
    std::string location = gate_reply.header("Location");
    if (location.empty()) {
      throw ClientError(ClientError::Kind::NegotiationFailed,
                        "timegate redirected without a Location header", 302);
    }
    outcome.memento_uri = resolve_against(gate_uri, location);
    Reply memento = fetch(outcome.memento_uri, std::nullopt);
    ++outcome.requests;
    if (memento.status != 200) {
      throw ClientError(ClientError::Kind::NegotiationFailed,
                        "memento answered HTTP " +
                            std::to_string(memento.status),
                        memento.status);
    }
    outcome.memento_datetime = memento.header("Memento-Datetime");
    if (outcome.memento_datetime.empty()) {
      throw ClientError(ClientError::Kind::NegotiationFailed,
                        "memento lacks a Memento-Datetime header",
                        memento.status);
    }
    return outcome;
  }

  if (gate_reply.status == 200) {
    outcome.memento_datetime = gate_reply.header("Memento-Datetime");
    if (outcome.memento_datetime.empty()) {
      throw ClientError(ClientError::Kind::NegotiationFailed,
                        "timegate answered 200 without Memento-Datetime", 200);
    }
    std::string content_location = gate_reply.header("Content-Location");
    outcome.memento_uri = content_location.empty()
                              ? gate_uri
                              : resolve_against(gate_uri, content_location);
    return outcome;
  }

  throw ClientError(ClientError::Kind::NegotiationFailed,
                    "timegate answered HTTP " +
                        std::to_string(gate_reply.status),
                    gate_reply.status);
}

namespace {

/// Which way a walk is allowed to continue from a page.
enum class Chase { Older, Newer, Both };

struct PendingPage {
  std::string uri;
  Chase chase;
};

}  // namespace

WalkOutcome cmd_walk_timemap(const std::string& url) {
  WalkOutcome outcome;

  Reply first = fetch(url, std::nullopt);
  std::string start_uri = url;
  if (!is_link_format(first)) {
    if (first.status != 200) {
      throw ClientError(ClientError::Kind::NegotiationFailed,
                        "cannot start a walk at " + url + ": HTTP " +
                            std::to_string(first.status),
                        first.status);
    }
    std::optional<std::string> timemap =
        rel_target(link_entries(first), "timemap");
    if (!timemap) {
      throw ClientError(ClientError::Kind::NoTimeMapAdvertised,
                        "no timemap relation advertised by " + url);
    }
    start_uri = resolve_against(url, *timemap);
    first = fetch(start_uri, std::nullopt);
  }

  std::map<std::string, WalkedMemento> found;  // keyed by URI, first wins
  std::set<std::string> visited{start_uri};
  std::deque<PendingPage> pending{{start_uri, Chase::Both}};
  std::optional<Reply> prefetched = std::move(first);

  while (!pending.empty()) {
    PendingPage page = std::move(pending.front());
    pending.pop_front();

    if (outcome.pages >= kWalkPageBudget) {
      throw ClientError(ClientError::Kind::CycleDetected,
                        "walk exceeded " + std::to_string(kWalkPageBudget) +
                            " timemap pages without converging");
    }
    Reply reply = prefetched ? *std::exchange(prefetched, std::nullopt)
                             : fetch(page.uri, std::nullopt);
    ++outcome.pages;
    if (reply.status != 200 || !is_link_format(reply)) {
      throw ClientError(ClientError::Kind::NegotiationFailed,
                        "timemap page " + page.uri + " answered HTTP " +
                            std::to_string(reply.status) +
                            (is_link_format(reply)
                                 ? std::string()
                                 : " without application/link-format"),
                        reply.status);
    }

    std::vector<LinkEntry> entries;
    try {
      entries = parse_link(reply.body);
    } catch (const LinkSyntaxError& error) {
      throw ClientError(ClientError::Kind::NegotiationFailed,
                        "timemap page " + page.uri +
                            " does not parse: " + error.what());
    }

    // The page's own temporal coverage, for telling older neighbors from
    // newer ones. Declared self bounds win; the mementos here are the
    // fallback.
    std::optional<Instant> self_from;
    std::optional<Instant> self_until;
    for (const LinkEntry& entry : entries) {
      if (!entry.has_rel("self")) continue;
      if (auto from = entry.attribute("from")) self_from = parse_instant(*from);
      if (auto until = entry.attribute("until")) {
        self_until = parse_instant(*until);
      }
    }
    for (const LinkEntry& entry : entries) {
      if (!entry.has_rel("memento")) continue;
      std::optional<std::string> datetime = entry.attribute("datetime");
      if (!datetime) {
        throw ClientError(ClientError::Kind::NegotiationFailed,
                          "memento entry without a datetime attribute on " +
                              page.uri);
      }
      std::optional<Instant> instant = parse_instant(*datetime);
      if (!instant) {
        throw ClientError(ClientError::Kind::NegotiationFailed,
                          "memento entry with unparsable datetime '" +
                              *datetime + "' on " + page.uri);
      }
      std::string uri = resolve_against(page.uri, entry.target);
      found.emplace(uri, WalkedMemento{*instant, *datetime, uri});
    }
    // Fallback bounds when the self entry declared none.
    if (!self_from || !self_until) {
      for (const LinkEntry& entry : entries) {
        if (!entry.has_rel("memento")) continue;
        auto instant = parse_instant(entry.attribute("datetime").value());
        if (!instant) continue;
        if (!self_from || *instant < *self_from) self_from = instant;
        if (!self_until || *instant > *self_until) self_until = instant;
      }
    }

    for (const LinkEntry& entry : entries) {
      if (!entry.has_rel("timemap") || entry.has_rel("self")) continue;
      std::string uri = resolve_against(page.uri, entry.target);

      // Classify the neighbor by its declared window. Without usable
      // attributes the walk follows it unrestricted, trading extra fetches
      // for completeness.
      std::optional<Instant> neighbor_from;
      std::optional<Instant> neighbor_until;
      if (auto from = entry.attribute("from")) {
        neighbor_from = parse_instant(*from);
      }
      if (auto until = entry.attribute("until")) {
        neighbor_until = parse_instant(*until);
      }
      Chase classified = Chase::Both;
      if (neighbor_until && self_from && *neighbor_until <= *self_from) {
        classified = Chase::Older;
      } else if (neighbor_from && self_until && *neighbor_from >= *self_until) {
        classified = Chase::Newer;
      }

      bool wanted = page.chase == Chase::Both || classified == Chase::Both ||
                    classified == page.chase;
      if (!wanted) continue;

      if (visited.count(uri) > 0) {
        // A chain of strictly older (or newer) windows can never return to
        // a page it already produced, so a directional revisit means the
        // neighbor links circle. Undirected links revisit pages routinely;
        // those are deduplicated in silence.
        if (page.chase != Chase::Both && classified == page.chase) {
          throw ClientError(ClientError::Kind::CycleDetected,
                            "timemap neighbor links circle back to " + uri);
        }
        continue;
      }
      Chase next_chase =
          page.chase == Chase::Both ? classified : page.chase;
      visited.insert(uri);
      pending.push_back(PendingPage{uri, next_chase});
    }
  }

  outcome.mementos.reserve(found.size());
  for (auto& [uri, memento] : found) outcome.mementos.push_back(memento);
  std::sort(outcome.mementos.begin(), outcome.mementos.end(),
            [](const WalkedMemento& a, const WalkedMemento& b) {
              if (a.instant != b.instant) return a.instant < b.instant;
              return a.uri < b.uri;
            });
  return outcome;
}

std::string to_string(DetectedPattern pattern) {
  switch (pattern) {
    case DetectedPattern::Pattern11: return "p1.1";
    case DetectedPattern::Pattern12: return "p1.2";
    case DetectedPattern::Pattern21: return "p2.1";
    case DetectedPattern::None: break;
  }
  return "none";
}

ConformanceReport cmd_audit(const std::string& url,
                            const std::string& datetime) {
  ConformanceReport report;
  auto check = [&report](std::string rule, bool pass, std::string detail) {
    report.checks.push_back(AuditCheck{std::move(rule), pass, std::move(detail)});
  };
  auto chain = [&report](std::string step, std::string uri, int status) {
    report.memento_chain.push_back(ChainStep{std::move(step), std::move(uri), status});
  };

  Reply page = fetch(url, std::nullopt);
  chain("original", url, page.status);
  std::vector<LinkEntry> page_entries = link_entries(page);
  std::optional<std::string> gate = rel_target(page_entries, "timegate");
  std::optional<std::string> timemap = rel_target(page_entries, "timemap");

  check("original-advertises-timegate", gate.has_value(),
        gate ? *gate : "no timegate relation in the Link header");
  check("original-advertises-timemap", timemap.has_value(),
        timemap ? *timemap : "no timemap relation in the Link header");

  DetectedPattern pattern = DetectedPattern::None;
  if (gate) {
    std::string gate_uri = resolve_against(url, *gate);
    Reply gate_reply = fetch(gate_uri, datetime);
    chain("timegate", gate_uri, gate_reply.status);

    bool varies = contains_token(gate_reply.header("Vary"), "accept-datetime");
    check("timegate-varies-on-accept-datetime", varies,
          varies ? "Vary: " + gate_reply.header("Vary")
                 : "Vary header missing or lacks Accept-Datetime");

    if (gate_reply.status == 302 && gate_reply.has_header("Location")) {
      pattern = gate_uri == url ? DetectedPattern::Pattern11
                                : DetectedPattern::Pattern21;
      std::string memento_uri =
          resolve_against(gate_uri, gate_reply.header("Location"));
      check("timegate-negotiates", true, "302 with Location " + memento_uri);

      Reply memento = fetch(memento_uri, std::nullopt);
      chain("memento", memento_uri, memento.status);
      std::string stamp = memento.header("Memento-Datetime");
      bool dated = memento.status == 200 && parse_instant(stamp).has_value();
      check("memento-carries-memento-datetime", dated,
            dated ? stamp
                  : "HTTP " + std::to_string(memento.status) +
                        (stamp.empty() ? " without Memento-Datetime"
                                       : " with unparsable '" + stamp + "'"));
    } else if (gate_reply.status == 200 &&
               !gate_reply.header("Memento-Datetime").empty()) {
      pattern = DetectedPattern::Pattern12;
      std::string content_location = gate_reply.header("Content-Location");
      std::string memento_uri = content_location.empty()
                                    ? gate_uri
                                    : resolve_against(gate_uri, content_location);
      check("timegate-negotiates", true,
            "200 negotiated in place, Content-Location " + memento_uri);
      chain("memento", memento_uri, gate_reply.status);

      std::string stamp = gate_reply.header("Memento-Datetime");
      bool dated = parse_instant(stamp).has_value();
      check("memento-carries-memento-datetime", dated,
            dated ? stamp : "unparsable Memento-Datetime '" + stamp + "'");
    } else {
      check("timegate-negotiates", false,
            "answered HTTP " + std::to_string(gate_reply.status) +
                " with neither a Location nor a Memento-Datetime");
    }

    Reply rejected = fetch(gate_uri, std::string("not a datetime"));
    bool refused = rejected.status == 400 ||
                   rejected.header("X-Memento-Error").rfind("400", 0) == 0;
    check("malformed-accept-datetime-rejected", refused,
          refused ? (rejected.status == 400
                         ? "HTTP 400"
                         : "softened 200 carrying X-Memento-Error 400")
                  : "answered HTTP " + std::to_string(rejected.status));
  }

  if (timemap) {
    std::string timemap_uri = resolve_against(url, *timemap);
    Reply timemap_reply = fetch(timemap_uri, std::nullopt);
    chain("timemap", timemap_uri, timemap_reply.status);

    std::vector<LinkEntry> entries;
    std::string parse_failure;
    try {
      entries = parse_link(timemap_reply.body);
    } catch (const LinkSyntaxError& error) {
      parse_failure = error.what();
    }
    std::size_t memento_count = 0;
    const LinkEntry* self = nullptr;
    for (const LinkEntry& entry : entries) {
      if (entry.has_rel("memento")) ++memento_count;
      if (entry.has_rel("self")) self = &entry;
    }
    bool parses = timemap_reply.status == 200 && is_link_format(timemap_reply) &&
                  parse_failure.empty() && memento_count > 0 && self != nullptr;
    check("timemap-parses", parses,
          parses ? std::to_string(memento_count) + " mementos on the page"
          : !parse_failure.empty()
              ? parse_failure
              : "HTTP " + std::to_string(timemap_reply.status) +
                    (is_link_format(timemap_reply)
                         ? (self == nullptr ? ", no self entry"
                                            : ", no memento entries")
                         : ", not application/link-format"));

    if (parses) {
      std::optional<Instant> from;
      std::optional<Instant> until;
      if (auto text = self->attribute("from")) from = parse_instant(*text);
      if (auto text = self->attribute("until")) until = parse_instant(*text);
      bool bounded = from.has_value() && until.has_value();
      if (bounded) {
        for (const LinkEntry& entry : entries) {
          if (!entry.has_rel("memento")) continue;
          auto instant = parse_instant(entry.attribute("datetime").value_or(""));
          if (!instant || *instant < *from || *instant > *until) {
            bounded = false;
            break;
          }
        }
      }
      check("timemap-self-bounds-mementos", bounded,
            bounded ? "from/until cover every memento on the page"
                    : "self entry lacks from/until or a memento falls outside");

      bool endpoints = false;
      for (const LinkEntry& entry : entries) {
        if (entry.has_rel("first") || entry.has_rel("last")) endpoints = true;
      }
      check("recommended-first-last", true,
            endpoints ? "first/last relations present"
                      : "first/last relations absent (optional)");
    }
  }

  report.pattern_detected = pattern;
  return report;
}

}  // namespace memento
