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

#include "memento/linkrel.hpp"

#include <array>
#include <cctype>

namespace memento {

namespace {

constexpr std::array<std::string_view, 4> kCanonicalAttributes = {
    "type", "datetime", "from", "until"};

bool known_attribute(std::string_view name) {
  for (auto known : kCanonicalAttributes) {
    if (name == known) return true;
  }
  return false;
}

void render_entry(const LinkEntry& entry, std::string& out) {
  if (entry.rels.empty()) {
    throw std::invalid_argument("link entry for <" + entry.target +
                                "> has no relation tokens");
  }
  for (const auto& [key, value] : entry.attributes) {
    if (!known_attribute(key)) {
      throw std::invalid_argument("link entry attribute '" + key +
                                  "' is not one of type/datetime/from/until");
    }
  }
  out += '<';
  out += entry.target;
  out += ">; rel=\"";
  for (std::size_t i = 0; i < entry.rels.size(); ++i) {
    if (i) out += ' ';
    out += entry.rels[i];
  }
  out += '"';
  for (auto name : kCanonicalAttributes) {
    for (const auto& [key, value] : entry.attributes) {
      if (key == name) {
        out += "; ";
        out += key;
        out += "=\"";
        out += value;
        out += '"';
      }
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<LinkEntry> run() {
    std::vector<LinkEntry> entries;
    skip_space();
    while (pos_ < text_.size()) {
      entries.push_back(parse_entry());
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ',') {
        fail("expected ',' between link entries");
      }
      ++pos_;
      skip_space();
      if (pos_ == text_.size()) break;  // tolerate one trailing comma
    }
    return entries;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw LinkSyntaxError(pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  LinkEntry parse_entry() {
    LinkEntry entry;
    if (text_[pos_] != '<') fail("expected '<' to open a link target");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '>') ++pos_;
    if (pos_ == text_.size()) fail("unterminated link target");
    entry.target = std::string(text_.substr(start, pos_ - start));
    ++pos_;
    bool saw_rel = false;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ',') break;
      if (text_[pos_] != ';') fail("expected ';' before link attribute");
      ++pos_;
      skip_space();
      auto [name, value] = parse_attribute();
      if (name == "rel") {
        if (saw_rel) fail("duplicate rel attribute");
        saw_rel = true;
        entry.rels = split_tokens(value);
        if (entry.rels.empty()) fail("empty rel attribute");
      } else if (known_attribute(name)) {
        if (entry.attribute(name).has_value()) {
          fail("duplicate '" + std::string(name) + "' attribute");
        }
        entry.attributes.emplace_back(std::string(name), std::move(value));
      } else {
        fail("unknown link attribute '" + std::string(name) + "'");
      }
    }
    if (!saw_rel) fail("link entry has no rel attribute");
    return entry;
  }

  std::pair<std::string, std::string> parse_attribute() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '-' || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected attribute name");
    std::string name(text_.substr(start, pos_ - start));
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != '=') fail("expected '=' after attribute name");
    ++pos_;
    skip_space();
    if (pos_ == text_.size()) fail("missing attribute value");
    std::string value;
    if (text_[pos_] == '"') {
      ++pos_;
      std::size_t value_start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ == text_.size()) fail("unterminated quoted value");
      value = std::string(text_.substr(value_start, pos_ - value_start));
      ++pos_;
    } else {
      std::size_t value_start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ';' && text_[pos_] != ',' &&
             text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\n' &&
             text_[pos_] != '\r') {
        ++pos_;
      }
      if (pos_ == value_start) fail("missing attribute value");
      value = std::string(text_.substr(value_start, pos_ - value_start));
    }
    return {std::move(name), std::move(value)};
  }

  static std::vector<std::string> split_tokens(std::string_view value) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < value.size()) {
      while (i < value.size() && value[i] == ' ') ++i;
      std::size_t start = i;
      while (i < value.size() && value[i] != ' ') ++i;
      if (i > start) tokens.emplace_back(value.substr(start, i - start));
    }
    return tokens;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_link_header(const std::vector<LinkEntry>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    render_entry(entries[i], out);
  }
  return out;
}

std::vector<LinkEntry> timemap_entries(const TimeMapPage& page) {
  if (page.mementos.empty()) {
    throw std::invalid_argument("a TimeMap page must hold at least one memento");
  }
  std::vector<LinkEntry> entries;

  LinkEntry self;
  self.target = page.self_uri;
  self.rels = {"self"};
  self.attributes = {{"type", "application/link-format"},
                     {"from", format_http_datetime(page.from)},
                     {"until", format_http_datetime(page.until)}};
  entries.push_back(std::move(self));

  for (const auto* neighbor : {&page.prev, &page.next}) {
    if (!neighbor->has_value()) continue;
    LinkEntry link;
    link.target = (*neighbor)->uri;
    link.rels = {"timemap"};
    link.attributes = {{"type", "application/link-format"},
                       {"from", format_http_datetime((*neighbor)->from)},
                       {"until", format_http_datetime((*neighbor)->until)}};
    entries.push_back(std::move(link));
  }

  LinkEntry timegate;
  timegate.target = page.timegate_uri;
  timegate.rels = {"timegate"};
  entries.push_back(std::move(timegate));

  LinkEntry original;
  original.target = page.original_uri;
  original.rels = {"original", "latest-version"};
  entries.push_back(std::move(original));

  for (std::size_t i = 0; i < page.mementos.size(); ++i) {
    const auto& memento = page.mementos[i];
    LinkEntry link;
    link.target = memento.uri;
    link.rels = {"memento"};
    if (page.recommended_relations) {
      if (page.contains_first && i == 0) link.rels.push_back("first");
      if (page.contains_last && i + 1 == page.mementos.size()) {
        link.rels.push_back("last");
      }
    }
    link.attributes = {{"datetime", format_http_datetime(memento.timestamp)}};
    entries.push_back(std::move(link));
  }
  return entries;
}

std::string render_timemap(const TimeMapPage& page) {
  auto entries = timemap_entries(page);
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",\n";
    render_entry(entries[i], out);
  }
  out += '\n';
  return out;
}

std::vector<LinkEntry> parse_link(std::string_view text) {
  return Parser(text).run();
}

}  // namespace memento
