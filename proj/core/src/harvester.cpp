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

#include "memento/harvester.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "memento/chronicle_store.hpp"
#include "memento/datetime.hpp"

#include "http_support.hpp"

namespace memento {

namespace {

using nlohmann::json;

/// Percent-encodes a query component: everything but unreserved characters.
std::string encode_query_component(std::string_view raw) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  out.reserve(raw.size());
  for (unsigned char c : raw) {
    bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '.' ||
                      c == '_' || c == '~';
    if (unreserved) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 0xF];
    }
  }
  return out;
}

/// "2007-04-22T15:01:20Z" -> "20070422150120", rejecting anything that is
/// not a Zulu-time ISO 8601 instant naming a real calendar date.
std::optional<std::string> iso8601_to_pivot(std::string_view iso) {
  if (iso.size() != 20 || iso[4] != '-' || iso[7] != '-' || iso[10] != 'T' ||
      iso[13] != ':' || iso[16] != ':' || iso[19] != 'Z') {
    return std::nullopt;
  }
  std::string pivot;
  pivot.reserve(14);
  for (char c : iso) {
    if (c >= '0' && c <= '9') pivot += c;
  }
  if (pivot.size() != 14) return std::nullopt;
  if (std::holds_alternative<DatetimeError>(parse_pivot(pivot))) {
    return std::nullopt;
  }
  return pivot;
}

std::string underscored(std::string title) {
  std::replace(title.begin(), title.end(), ' ', '_');
  return title;
}

/// Issues one API request, enforcing the politeness pause between
/// consecutive calls, and returns the parsed response body. Transport and
/// HTTP failures become Kind::Http; non-JSON bodies and API-reported errors
/// become Kind::Api.
json api_get(httplib::Client& client, const std::string& target,
             const HarvestJob& job, HarvestSummary& summary) {
  if (summary.requests > 0 && job.polite_delay_ms > 0) {
    std::this_thread::sleep_for(std::chrono::milliseconds(job.polite_delay_ms));
  }
  ++summary.requests;
  httplib::Result response = client.Get(target);
  if (!response) {
    throw HarvestError(HarvestError::Kind::Http,
                       "cannot reach " + job.api_endpoint + ": " +
                           httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    throw HarvestError(HarvestError::Kind::Http,
                       "API returned HTTP " + std::to_string(response->status),
                       response->status);
  }
  json body = json::parse(response->body, nullptr, false);
  if (body.is_discarded()) {
    throw HarvestError(HarvestError::Kind::Api, "API response is not JSON");
  }
  if (body.contains("error")) {
    const json& error = body["error"];
    std::string message = error.value("info", error.value("code", ""));
    if (message.empty()) message = "unspecified API error";
    throw HarvestError(HarvestError::Kind::Api, message);
  }
  return body;
}

/// Fetches the complete history of one title, appending dump records in
/// fetch order. Returns the number of revisions fetched; zero means the
/// wiki has no such page.
std::int64_t fetch_title(httplib::Client& client, const std::string& api_path,
                         const std::string& title, const HarvestJob& job,
                         HarvestSummary& summary,
                         std::vector<DumpRecord>& records) {
  const std::string base_query =
      api_path +
      "?action=query&format=json&formatversion=2&prop=revisions"
      "&rvprop=ids%7Ctimestamp%7Ccontent&rvdir=newer"
      "&rvlimit=" + std::to_string(job.batch_limit) +
      "&titles=" + encode_query_component(title);

  std::int64_t fetched = 0;
  std::string continue_token;
  while (true) {
    std::string target = base_query;
    if (!continue_token.empty()) {
      target += "&rvcontinue=" + encode_query_component(continue_token);
    }
    json body = api_get(client, target, job, summary);

    try {
      const json& pages = body.at("query").at("pages");
      if (!pages.is_array() || pages.empty()) {
        throw HarvestError(HarvestError::Kind::Api,
                           "response carries no page for '" + title + "'");
      }
      const json& page = pages.at(0);
      if (page.contains("missing") || page.contains("invalid")) {
        return fetched;
      }
      std::string dump_title = underscored(page.value("title", title));
      for (const json& revision : page.value("revisions", json::array())) {
        std::int64_t rev_id = revision.at("revid").get<std::int64_t>();
        std::string stamp = revision.at("timestamp").get<std::string>();
        std::optional<std::string> pivot = iso8601_to_pivot(stamp);
        if (!pivot) {
          throw HarvestError(HarvestError::Kind::Api,
                             "revision " + std::to_string(rev_id) +
                                 " of '" + title +
                                 "' has unusable timestamp '" + stamp + "'");
        }
        records.push_back(DumpRecord{dump_title, rev_id, *pivot, "text/x-wiki",
                                     revision.value("content", std::string())});
        ++fetched;
      }
    } catch (const json::exception& e) {
      throw HarvestError(HarvestError::Kind::Api,
                         std::string("malformed API response: ") + e.what());
    }

    if (!body.contains("continue")) return fetched;
    std::string next = body["continue"].value("rvcontinue", "");
    if (next.empty() || next == continue_token) {
      throw HarvestError(HarvestError::Kind::Api,
                         "API continuation is not advancing for '" + title + "'");
    }
    continue_token = std::move(next);
  }
}

}  // namespace

HarvestSummary harvest(const HarvestJob& job,
                       const std::filesystem::path& out_path) {
  if (job.batch_limit < 1 || job.batch_limit > 500) {
    throw std::invalid_argument("batch_limit must be between 1 and 500, got " +
                                std::to_string(job.batch_limit));
  }
  if (job.polite_delay_ms < 0) {
    throw std::invalid_argument("polite_delay_ms must be non-negative, got " +
                                std::to_string(job.polite_delay_ms));
  }
  auto split = detail::split_url(job.api_endpoint);
  if (!split) {
    throw std::invalid_argument(
        "api_endpoint must be an absolute http(s) URL, got '" +
        job.api_endpoint + "'");
  }

  httplib::Client client(split->origin);
  client.set_follow_location(true);
  client.set_connection_timeout(30, 0);
  client.set_read_timeout(30, 0);

  HarvestSummary summary;
  std::vector<DumpRecord> records;
  for (const std::string& title : job.titles) {
    std::int64_t fetched =
        fetch_title(client, split->target, title, job, summary, records);
    if (fetched > 0) {
      ++summary.pages;
      summary.revisions += fetched;
    } else {
      summary.missing.push_back(title);
    }
  }

  write_dump(out_path, records);
  return summary;
}

DumpReport verify_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DumpError(DumpError::Kind::Io, 0, "cannot open " + path.string());
  }

  struct SeenRevision {
    std::string timestamp;
    std::int64_t rev_id;
    std::size_t line_no;
    bool orderable;  // false when the timestamp was unusable
  };

  DumpReport report;
  std::map<std::string, std::vector<SeenRevision>, std::less<>> pages;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    DumpRecord record;
    try {
      record = parse_dump_line(line, line_no);
    } catch (const DumpError& error) {
      report.violations.push_back(error.what());
      continue;
    }
    ++report.records;

    auto& seen = pages[record.title];
    bool valid_timestamp =
        !std::holds_alternative<DatetimeError>(parse_pivot(record.timestamp));
    if (!valid_timestamp) {
      report.violations.push_back("line " + std::to_string(line_no) +
                                  ": bad timestamp '" + record.timestamp +
                                  "' for revision " +
                                  std::to_string(record.rev_id) + " of '" +
                                  record.title + "'");
    }
    auto duplicate =
        std::find_if(seen.begin(), seen.end(), [&](const SeenRevision& s) {
          return s.rev_id == record.rev_id;
        });
    if (duplicate != seen.end()) {
      report.violations.push_back(
          "line " + std::to_string(line_no) + ": duplicate revision " +
          std::to_string(record.rev_id) + " of '" + record.title +
          "' (first at line " + std::to_string(duplicate->line_no) + ")");
      continue;
    }
    seen.push_back(
        SeenRevision{record.timestamp, record.rev_id, line_no, valid_timestamp});
  }
  report.pages = pages.size();

  // Ordering is judged only among revisions whose timestamps parsed; the
  // unusable ones were already reported line by line.
  for (auto& [title, revisions] : pages) {
    std::vector<SeenRevision> orderable;
    orderable.reserve(revisions.size());
    for (const SeenRevision& revision : revisions) {
      if (revision.orderable) orderable.push_back(revision);
    }
    std::sort(orderable.begin(), orderable.end(),
              [](const SeenRevision& a, const SeenRevision& b) {
                if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                return a.rev_id < b.rev_id;
              });
    for (std::size_t i = 1; i < orderable.size(); ++i) {
      if (orderable[i - 1].rev_id > orderable[i].rev_id) {
        report.violations.push_back(
            "page '" + title + "': revisions " +
            std::to_string(orderable[i - 1].rev_id) + " and " +
            std::to_string(orderable[i].rev_id) +
            " are ordered differently by id and by timestamp");
      }
    }
  }
  return report;
}

}  // namespace memento
