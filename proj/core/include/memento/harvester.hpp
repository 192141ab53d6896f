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

// Revision harvester: pulls the complete version history of wiki pages from
// a MediaWiki-compatible Action API and writes it as a revision dump file,
// the ingestion path for building a store from a real corpus.
//
// The harvester speaks a small, documented subset of the Action API:
//
//   GET {endpoint}?action=query&format=json&formatversion=2&prop=revisions
//       &titles={one title}&rvprop=ids|timestamp|content&rvdir=newer
//       &rvlimit={batch_limit}[&rvcontinue={token}]
//
// and expects the formatversion=2 JSON response shape: `query.pages` is an
// array whose single element carries either `"missing": true` or a
// `revisions` array of objects with `revid`, `timestamp` (ISO 8601 Zulu)
// and `content`. Responses may carry `continue.rvcontinue`, which the next
// request echoes until the history is exhausted. Top-level `error` objects
// abort the job.
//
// Titles: the wiki's canonical page names use spaces, while dump titles and
// the server's /wiki/ URIs use underscores. The harvester requests titles
// as given (the API treats space and underscore alike) and folds spaces to
// underscores in the canonical title the API reports before writing dump
// records, so a harvested corpus serves under the expected URIs.

#ifndef MEMENTO_HARVESTER_HPP
#define MEMENTO_HARVESTER_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace memento {

/// One harvesting assignment: which API to ask, which pages to pull, and
/// how hard to push. batch_limit is capped at 500, the most revisions a
/// MediaWiki API will return per request.
struct HarvestJob {
  std::string api_endpoint;  // absolute http(s) URL of the api.php entry point
  std::vector<std::string> titles;
  int batch_limit = 500;    // revisions per API request, 1..500
  int polite_delay_ms = 0;  // pause between consecutive API requests

  friend bool operator==(const HarvestJob&, const HarvestJob&) = default;
};

/// Raised when the API cannot be harvested: a transport-level failure or
/// non-200 response (Kind::Http, with the status, 0 when the connection
/// itself failed) or a structurally bad or error-bearing response body
/// (Kind::Api). Missing titles are not errors; they are reported in the
/// summary and the job continues.
class HarvestError : public std::runtime_error {
 public:
  enum class Kind { Http, Api };

  HarvestError(Kind kind, std::string message, int status = 0)
      : std::runtime_error(std::move(message)), kind(kind), status(status) {}

  Kind kind;
  int status;  // HTTP status for Kind::Http; 0 otherwise
};

/// What a harvest accomplished. pages counts titles that yielded at least
/// one revision; revisions counts dump records written; requests counts API
/// round trips, including the ones that reported a missing title.
struct HarvestSummary {
  std::int64_t pages = 0;
  std::int64_t revisions = 0;
  std::int64_t requests = 0;
  std::vector<std::string> missing;  // titles the wiki does not have

  friend bool operator==(const HarvestSummary&, const HarvestSummary&) = default;
};

/// Pulls every revision of every title in the job and writes them to a dump
/// file at out_path, in fetch order (oldest first per title). The file is
/// written only after the whole job succeeds, so a thrown HarvestError
/// leaves no partial dump behind. Content is recorded as text/x-wiki; a
/// revision whose text the wiki withholds is recorded with empty content so
/// the record count still matches the wiki's history.
///
/// Throws std::invalid_argument for an out-of-range batch_limit or an
/// endpoint that is not an absolute http(s) URL, HarvestError for transport
/// and API failures, and DumpError if the dump file cannot be written.
HarvestSummary harvest(const HarvestJob& job,
                       const std::filesystem::path& out_path);

/// Findings from re-validating a dump file without loading it into a store.
/// Violations are human-readable, one per defect, in file order for
/// line-scoped defects followed by per-page ordering findings.
struct DumpReport {
  std::size_t records = 0;  // parsable records seen
  std::size_t pages = 0;    // distinct titles among them
  std::vector<std::string> violations;

  bool clean() const { return violations.empty(); }
};

/// Checks a dump file against the invariants a store will enforce: every
/// line parses, timestamps are real UTC instants, no page repeats a
/// revision id, and within a page the id order and the timestamp order
/// agree. Unlike loading, verification reports every violation instead of
/// stopping at the first. Throws DumpError only when the file is unreadable.
DumpReport verify_dump(const std::filesystem::path& path);

}  // namespace memento

#endif  // MEMENTO_HARVESTER_HPP
