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

#ifndef MEMENTO_TESTS_SUPPORT_FIXTURES_HPP
#define MEMENTO_TESTS_SUPPORT_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "memento/chronicle_store.hpp"
#include "memento/datetime.hpp"
#include "memento/negotiator.hpp"

namespace memento::testing {

inline Instant at(std::int64_t unix_seconds) {
  return Instant{std::chrono::seconds{unix_seconds}};
}

inline Revision rev(std::int64_t rev_id, std::int64_t unix_seconds,
                    std::string content = "x",
                    std::string content_type = "text/html") {
  return Revision{rev_id, at(unix_seconds), std::move(content),
                  std::move(content_type)};
}

inline PageHistory history_of(std::string title, std::vector<Revision> revisions) {
  std::sort(revisions.begin(), revisions.end(),
            [](const Revision& a, const Revision& b) {
              if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
              return a.rev_id < b.rev_id;
            });
  return PageHistory{std::move(title), std::move(revisions)};
}

/// The worked example used throughout the protocol tests: a three-revision
/// page whose datetimes exercise distinct years, leap handling, and both
/// weekday extremes.
inline PageHistory daenerys_history() {
  auto ts = [](const char* pivot) {
    return std::get<TargetDatetime>(parse_pivot(pivot)).instant;
  };
  return PageHistory{
      "Daenerys_Targaryen",
      {
          Revision{1499, ts("20070422150120"), "Daenerys, first draft.", "text/html"},
          Revision{27870, ts("20110629120000"), "Daenerys, midway.", "text/html"},
          Revision{90020, ts("20130223015523"), "Daenerys, current.", "text/html"},
      }};
}

/// Reference selection: scan every revision and keep the last one at or
/// before the target, falling back to the oldest revision. Deliberately
/// O(n); the production negotiator must agree with this on all inputs.
inline const Revision* negotiate_oracle(const PageHistory& history, Instant target) {
  const Revision* best = nullptr;
  for (const auto& revision : history.revisions) {
    if (revision.timestamp <= target) {
      if (!best || revision.timestamp > best->timestamp ||
          (revision.timestamp == best->timestamp && revision.rev_id > best->rev_id)) {
        best = &revision;
      }
    }
  }
  return best ? best : &history.revisions.front();
}

/// Reference window queries: filter, sort, then clip. Same contract as
/// Store::range_before / range_after / latest_window.
inline std::vector<Revision> range_before_oracle(const PageHistory& history,
                                                 Instant pivot, std::size_t limit) {
  std::vector<Revision> hits;
  for (const auto& revision : history.revisions) {
    if (revision.timestamp < pivot) hits.push_back(revision);
  }
  std::sort(hits.begin(), hits.end(), [](const Revision& a, const Revision& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.rev_id < b.rev_id;
  });
  if (hits.size() > limit) hits.erase(hits.begin(), hits.end() - static_cast<std::ptrdiff_t>(limit));
  return hits;
}

inline std::vector<Revision> range_after_oracle(const PageHistory& history,
                                                Instant pivot, std::size_t limit) {
  std::vector<Revision> hits;
  for (const auto& revision : history.revisions) {
    if (revision.timestamp > pivot) hits.push_back(revision);
  }
  std::sort(hits.begin(), hits.end(), [](const Revision& a, const Revision& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.rev_id < b.rev_id;
  });
  if (hits.size() > limit) hits.resize(limit);
  return hits;
}

inline std::vector<Revision> latest_window_oracle(const PageHistory& history,
                                                  std::size_t limit) {
  std::vector<Revision> hits = history.revisions;
  if (hits.size() > limit) hits.erase(hits.begin(), hits.end() - static_cast<std::ptrdiff_t>(limit));
  return hits;
}

/// Random history with strictly increasing timestamps and increasing ids.
/// Strict increase keeps window boundaries unambiguous, matching real wiki
/// histories where one page cannot take two edits in the same second.
inline PageHistory random_history(std::mt19937& rng, std::size_t count,
                                  std::string title = "Random_Page") {
  std::uniform_int_distribution<std::int64_t> gap(1, 100000);
  std::vector<Revision> revisions;
  std::int64_t t = 1000000000;  // 2001-09-09, comfortably valid
  std::int64_t id = 0;
  for (std::size_t i = 0; i < count; ++i) {
    t += gap(rng);
    id += 1 + gap(rng) % 50;
    revisions.push_back(rev(id, t, "r" + std::to_string(id)));
  }
  return PageHistory{std::move(title), std::move(revisions)};
}

/// Random history that may contain shared timestamps (distinct ids), for
/// exercising the (timestamp, rev_id) tie-break paths.
inline PageHistory random_history_with_ties(std::mt19937& rng, std::size_t count) {
  std::uniform_int_distribution<std::int64_t> gap(0, 3);
  std::vector<Revision> revisions;
  std::int64_t t = 1000000000;
  for (std::size_t i = 0; i < count; ++i) {
    t += gap(rng);
    revisions.push_back(rev(static_cast<std::int64_t>(i + 1), t));
  }
  return PageHistory{"Tied_Page", std::move(revisions)};
}

inline std::vector<std::int64_t> rev_ids(const std::vector<Revision>& revisions) {
  std::vector<std::int64_t> ids;
  ids.reserve(revisions.size());
  for (const auto& revision : revisions) ids.push_back(revision.rev_id);
  return ids;
}

}  // namespace memento::testing

#endif  // MEMENTO_TESTS_SUPPORT_FIXTURES_HPP
