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

#ifndef MEMENTO_CHRONICLE_STORE_HPP
#define MEMENTO_CHRONICLE_STORE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "memento/datetime.hpp"

namespace memento {

/// One stored version of a page. rev_id is unique per page and agrees with
/// timestamp order (later revisions have larger ids).
struct Revision {
  std::int64_t rev_id = 0;
  Instant timestamp{};
  std::string content;
  std::string content_type;

  friend bool operator==(const Revision&, const Revision&) = default;
};

/// A page's complete version history. Always non-empty, ascending by
/// (timestamp, rev_id); front() is the first memento, back() the last.
struct PageHistory {
  std::string title;
  std::vector<Revision> revisions;

  const Revision& first() const { return revisions.front(); }
  const Revision& last() const { return revisions.back(); }
};

/// One line of a revision dump file. Fields appear in the file in this
/// order, tab-separated; content carries \t \n \\ escapes.
struct DumpRecord {
  std::string title;
  std::int64_t rev_id = 0;
  std::string timestamp;  // 14-digit YYYYMMDDHHMMSS, UTC
  std::string content_type;
  std::string content;

  friend bool operator==(const DumpRecord&, const DumpRecord&) = default;
};

class DumpError : public std::runtime_error {
 public:
  enum class Kind { MalformedRecord, DuplicateRevision, InvalidTimestamp, Io };

  DumpError(Kind kind, std::size_t line_no, std::string message,
            std::string title = {}, std::int64_t rev_id = 0)
      : std::runtime_error(std::move(message)),
        kind(kind),
        line_no(line_no),
        title(std::move(title)),
        rev_id(rev_id) {}

  Kind kind;
  std::size_t line_no;  // 1-based; 0 when not line-specific
  std::string title;
  std::int64_t rev_id;
};

/// Escapes tab, newline and backslash for the content field of a dump line.
std::string escape_dump_field(std::string_view raw);

/// Inverse of escape_dump_field. Returns nullopt on an invalid escape or a
/// raw tab/newline that should have been escaped.
std::optional<std::string> unescape_dump_field(std::string_view escaped);

/// Parses one dump line into a record. Throws DumpError with the given line
/// number on malformed input. The timestamp is validated by the store, not
/// here, so verify-style callers can report both classes of defect.
DumpRecord parse_dump_line(std::string_view line, std::size_t line_no);

/// Renders a record as one dump line (no trailing newline).
std::string format_dump_line(const DumpRecord& record);

/// Writes records to a dump file, one line each.
void write_dump(const std::filesystem::path& path,
                const std::vector<DumpRecord>& records);

/// Immutable store of every revision of every page. Built once from a dump,
/// then read-only; safe for unlimited concurrent readers.
class Store {
 public:
  /// Loads a dump file. Throws DumpError on unreadable files, malformed
  /// records, invalid timestamps, or duplicate (title, rev_id) pairs.
  static Store load_dump(const std::filesystem::path& path);

  /// Builds a store from in-memory records, applying the same validation
  /// and ordering as load_dump.
  static Store from_records(const std::vector<DumpRecord>& records);

  /// Full ascending history for a title, or nullptr. Titles are exact,
  /// case-sensitive byte strings.
  const PageHistory* find_history(std::string_view title) const;

  /// Exact revision by id, or nullptr.
  const Revision* find_revision(std::string_view title, std::int64_t rev_id) const;

  /// The `limit` newest revisions strictly before pivot, ascending.
  /// nullopt when the title is unknown; empty when none qualify.
  std::optional<std::vector<Revision>> range_before(std::string_view title,
                                                    Instant pivot,
                                                    std::size_t limit) const;

  /// The `limit` oldest revisions strictly after pivot, ascending.
  std::optional<std::vector<Revision>> range_after(std::string_view title,
                                                   Instant pivot,
                                                   std::size_t limit) const;

  /// The `limit` newest revisions, ascending.
  std::optional<std::vector<Revision>> latest_window(std::string_view title,
                                                     std::size_t limit) const;

  std::size_t page_count() const { return pages_.size(); }
  std::vector<std::string> titles() const;

 private:
  void insert_record(const DumpRecord& record, std::size_t line_no);

  std::map<std::string, PageHistory, std::less<>> pages_;
};

}  // namespace memento

#endif  // MEMENTO_CHRONICLE_STORE_HPP
