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

#include "memento/chronicle_store.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace memento {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

std::string escape_dump_field(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::optional<std::string> unescape_dump_field(std::string_view escaped) {
  std::string out;
  out.reserve(escaped.size());
  for (std::size_t i = 0; i < escaped.size(); ++i) {
    char c = escaped[i];
    if (c == '\t' || c == '\n') return std::nullopt;
    if (c != '\\') {
      out += c;
      continue;
    }
    if (i + 1 >= escaped.size()) return std::nullopt;
    switch (escaped[++i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case '\\': out += '\\'; break;
      default: return std::nullopt;
    }
  }
  return out;
}

DumpRecord parse_dump_line(std::string_view line, std::size_t line_no) {
  auto fields = split_tabs(line);
  if (fields.size() != 5) {
    throw DumpError(DumpError::Kind::MalformedRecord, line_no,
                    "line " + std::to_string(line_no) + ": expected 5 fields, got " +
                        std::to_string(fields.size()));
  }
  DumpRecord record;
  record.title = std::string(fields[0]);
  if (record.title.empty()) {
    throw DumpError(DumpError::Kind::MalformedRecord, line_no,
                    "line " + std::to_string(line_no) + ": empty title");
  }
  auto rev_id = parse_int(fields[1]);
  if (!rev_id || *rev_id <= 0) {
    throw DumpError(DumpError::Kind::MalformedRecord, line_no,
                    "line " + std::to_string(line_no) + ": bad revision id '" +
                        std::string(fields[1]) + "'",
                    record.title);
  }
  record.rev_id = *rev_id;
  record.timestamp = std::string(fields[2]);
  record.content_type = std::string(fields[3]);
  if (record.content_type.empty()) {
    throw DumpError(DumpError::Kind::MalformedRecord, line_no,
                    "line " + std::to_string(line_no) + ": empty content type",
                    record.title, record.rev_id);
  }
  auto content = unescape_dump_field(fields[4]);
  if (!content) {
    throw DumpError(DumpError::Kind::MalformedRecord, line_no,
                    "line " + std::to_string(line_no) + ": invalid escape in content",
                    record.title, record.rev_id);
  }
  record.content = std::move(*content);
  return record;
}

std::string format_dump_line(const DumpRecord& record) {
  std::string out;
  out += record.title;
  out += '\t';
  out += std::to_string(record.rev_id);
  out += '\t';
  out += record.timestamp;
  out += '\t';
  out += record.content_type;
  out += '\t';
  out += escape_dump_field(record.content);
  return out;
}

void write_dump(const std::filesystem::path& path,
                const std::vector<DumpRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DumpError(DumpError::Kind::Io, 0,
                    "cannot open " + path.string() + " for writing");
  }
  for (const auto& record : records) {
    out << format_dump_line(record) << '\n';
  }
  if (!out) {
    throw DumpError(DumpError::Kind::Io, 0, "write failed on " + path.string());
  }
}

namespace {

void sort_histories(std::map<std::string, PageHistory, std::less<>>& pages) {
  for (auto& [title, history] : pages) {
    std::sort(history.revisions.begin(), history.revisions.end(),
              [](const Revision& a, const Revision& b) {
                if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                return a.rev_id < b.rev_id;
              });
  }
}

}  // namespace

void Store::insert_record(const DumpRecord& record, std::size_t line_no) {
  if (record.title.empty()) {
    throw DumpError(DumpError::Kind::MalformedRecord, line_no,
                    "line " + std::to_string(line_no) + ": empty title");
  }
  if (record.rev_id <= 0) {
    throw DumpError(DumpError::Kind::MalformedRecord, line_no,
                    "line " + std::to_string(line_no) + ": bad revision id",
                    record.title, record.rev_id);
  }
  auto parsed = parse_pivot(record.timestamp);
  if (std::holds_alternative<DatetimeError>(parsed)) {
    throw DumpError(DumpError::Kind::InvalidTimestamp, line_no,
                    "line " + std::to_string(line_no) + ": bad timestamp '" +
                        record.timestamp + "'",
                    record.title, record.rev_id);
  }
  auto& history = pages_[record.title];
  history.title = record.title;
  for (const auto& existing : history.revisions) {
    if (existing.rev_id == record.rev_id) {
      throw DumpError(DumpError::Kind::DuplicateRevision, line_no,
                      "line " + std::to_string(line_no) + ": duplicate revision " +
                          std::to_string(record.rev_id) + " of '" + record.title + "'",
                      record.title, record.rev_id);
    }
  }
  history.revisions.push_back(Revision{record.rev_id,
                                       std::get<TargetDatetime>(parsed).instant,
                                       record.content, record.content_type});
}

Store Store::load_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DumpError(DumpError::Kind::Io, 0, "cannot open " + path.string());
  }
  Store store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    store.insert_record(parse_dump_line(line, line_no), line_no);
  }
  sort_histories(store.pages_);
  return store;
}

Store Store::from_records(const std::vector<DumpRecord>& records) {
  Store store;
  std::size_t index = 0;
  for (const auto& record : records) {
    store.insert_record(record, ++index);
  }
  sort_histories(store.pages_);
  return store;
}

const PageHistory* Store::find_history(std::string_view title) const {
  auto it = pages_.find(title);
  if (it == pages_.end()) return nullptr;
  return &it->second;
}

const Revision* Store::find_revision(std::string_view title,
                                     std::int64_t rev_id) const {
  const PageHistory* history = find_history(title);
  if (!history) return nullptr;
  for (const auto& revision : history->revisions) {
    if (revision.rev_id == rev_id) return &revision;
  }
  return nullptr;
}

std::optional<std::vector<Revision>> Store::range_before(std::string_view title,
                                                         Instant pivot,
                                                         std::size_t limit) const {
  const PageHistory* history = find_history(title);
  if (!history) return std::nullopt;
  const auto& all = history->revisions;
  auto end = std::lower_bound(all.begin(), all.end(), pivot,
                              [](const Revision& r, Instant t) {
                                return r.timestamp < t;
                              });
  std::size_t available = static_cast<std::size_t>(end - all.begin());
  std::size_t take = std::min(limit, available);
  return std::vector<Revision>(end - static_cast<std::ptrdiff_t>(take), end);
}

std::optional<std::vector<Revision>> Store::range_after(std::string_view title,
                                                        Instant pivot,
                                                        std::size_t limit) const {
  const PageHistory* history = find_history(title);
  if (!history) return std::nullopt;
  const auto& all = history->revisions;
  auto begin = std::upper_bound(all.begin(), all.end(), pivot,
                                [](Instant t, const Revision& r) {
                                  return t < r.timestamp;
                                });
  std::size_t available = static_cast<std::size_t>(all.end() - begin);
  std::size_t take = std::min(limit, available);
  return std::vector<Revision>(begin, begin + static_cast<std::ptrdiff_t>(take));
}

std::optional<std::vector<Revision>> Store::latest_window(std::string_view title,
                                                          std::size_t limit) const {
  const PageHistory* history = find_history(title);
  if (!history) return std::nullopt;
  const auto& all = history->revisions;
  std::size_t take = std::min(limit, all.size());
  return std::vector<Revision>(all.end() - static_cast<std::ptrdiff_t>(take),
                               all.end());
}

std::vector<std::string> Store::titles() const {
  std::vector<std::string> out;
  out.reserve(pages_.size());
  for (const auto& [title, history] : pages_) out.push_back(title);
  return out;
}

}  // namespace memento
