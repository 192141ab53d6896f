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

#ifndef MEMENTO_LINKREL_HPP
#define MEMENTO_LINKREL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "memento/datetime.hpp"

namespace memento {

/// One web-link relation: a target URI, its relation tokens, and typed
/// attributes. Valid entries keep attributes in canonical order (type,
/// datetime, from, until) with each name at most once; the renderer emits
/// that order and the parser preserves textual order, so valid entries
/// round-trip exactly.
struct LinkEntry {
  std::string target;
  std::vector<std::string> rels;
  std::vector<std::pair<std::string, std::string>> attributes;

  friend bool operator==(const LinkEntry&, const LinkEntry&) = default;

  std::optional<std::string> attribute(std::string_view name) const {
    for (const auto& [key, value] : attributes) {
      if (key == name) return value;
    }
    return std::nullopt;
  }
  bool has_rel(std::string_view token) const {
    for (const auto& rel : rels) {
      if (rel == token) return true;
    }
    return false;
  }
};

class LinkSyntaxError : public std::runtime_error {
 public:
  LinkSyntaxError(std::size_t position, const std::string& message)
      : std::runtime_error("offset " + std::to_string(position) + ": " + message),
        position(position) {}

  std::size_t position;  // byte offset into the parsed text
};

/// One memento row of a TimeMap page.
struct TimeMapMemento {
  std::int64_t rev_id = 0;
  Instant timestamp{};
  std::string uri;

  friend bool operator==(const TimeMapMemento&, const TimeMapMemento&) = default;
};

/// Link to the adjacent TimeMap page on one side, carrying that page's own
/// memento range so clients can skip pages they do not need.
struct TimeMapNeighbor {
  Instant pivot{};  // the 14-digit instant embedded in uri
  std::string uri;
  Instant from{};   // neighbor page's oldest memento
  Instant until{};  // neighbor page's newest memento

  friend bool operator==(const TimeMapNeighbor&, const TimeMapNeighbor&) = default;
};

/// One page of a possibly multi-page TimeMap. mementos are ascending by
/// timestamp; from/until are the page's own endpoints. prev points at older
/// mementos (descending pivot), next at newer ones (ascending pivot).
struct TimeMapPage {
  std::string title;
  std::vector<TimeMapMemento> mementos;
  Instant from{};
  Instant until{};
  std::optional<TimeMapNeighbor> prev;
  std::optional<TimeMapNeighbor> next;
  std::string self_uri;
  std::string timegate_uri;
  std::string original_uri;
  // When true, the history's endpoint mementos (if on this page) carry the
  // extra "first"/"last" relation tokens.
  bool recommended_relations = false;
  bool contains_first = false;
  bool contains_last = false;
};

/// Renders entries as one `Link` header value: entries joined by `,` with
/// no padding, each as `<target>; rel="r1 r2"; attr="v"`.
std::string render_link_header(const std::vector<LinkEntry>& entries);

/// The ordered entry list a TimeMap page serializes to: self, neighbors
/// (older side first), timegate, original, then mementos ascending.
std::vector<LinkEntry> timemap_entries(const TimeMapPage& page);

/// Renders a TimeMap page as an application/link-format body: one entry per
/// line, lines joined by `,\n`, final newline. Precondition: at least one
/// memento.
std::string render_timemap(const TimeMapPage& page);

/// Parses a `Link` header value or an application/link-format body.
/// Inverse of the renderers on their outputs; tolerates arbitrary
/// whitespace around separators and both quoted and bare token values.
/// Throws LinkSyntaxError on malformed text.
std::vector<LinkEntry> parse_link(std::string_view text);

}  // namespace memento

#endif  // MEMENTO_LINKREL_HPP
