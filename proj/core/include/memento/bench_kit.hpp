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

#ifndef MEMENTO_BENCH_KIT_HPP
#define MEMENTO_BENCH_KIT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace memento {

/// One request line of a Siege-style load-test log. secs and bytes keep
/// their raw textual form so analyzer output preserves the log's own
/// decimal rendering (0.60 stays 0.60, not 0.6).
struct LogRecord {
  int status = 0;
  std::string secs_text;
  double secs = 0;
  std::int64_t bytes = 0;
  std::string bytes_text;
  std::string method;
  std::string uri;
  std::string variant;  // column label once classified; empty before
  std::string page;     // extracted page name; empty when unknown
};

struct SiegeLog {
  std::vector<LogRecord> records;
  std::size_t skipped = 0;  // lines that were not siege records
};

/// Parses log text, tolerating ANSI color escapes and flexible spacing.
/// Unparsable lines are counted, never fatal.
SiegeLog parse_siege_log(std::string_view text);

/// Renders one record in the canonical Siege line shape:
/// `HTTP/1.1 302   0.60 secs:       0 bytes ==> GET  /path`.
std::string emit_siege_line(const LogRecord& record);

/// Page name for a request URI: the `title=` query parameter when present
/// (cut at the next '&'), else the last path segment. Empty result means
/// no name could be extracted.
std::optional<std::string> page_name_from_uri(std::string_view uri);

/// Maps a URI substring to a CSV column. Table order fixes the CSV column
/// order; classification picks the longest matching substring, so generic
/// prefixes may coexist with more specific ones.
struct VariantColumn {
  std::string uri_substring;
  std::string column;  // CSV header label
  std::string key;     // lowercase label used in diagnostics
};
using VariantTable = std::vector<VariantColumn>;

/// Two-variant table for TimeGate comparisons: a dedicated-TimeGate
/// deployment vs the default one.
VariantTable default_timegate_variants();

/// Three-variant table for page/TimeMap comparisons: no extension
/// installed, default install, and all optional headers enabled.
VariantTable default_page_variants();

struct AnalyzeResult {
  std::string csv;                       // header plus one row per complete page
  std::vector<std::string> diagnostics;  // unparsable names, incomplete pages
  std::size_t skipped_lines = 0;
};

/// Extracts redirect (302) timings per page and emits a PAGE,SPECIAL,DEFAULT
/// CSV of pages seen under every variant. Later samples of the same
/// page+variant overwrite earlier ones.
AnalyzeResult analyze_timegate(std::string_view log_text,
                               const VariantTable& variants = default_timegate_variants());

enum class PageMetric { Seconds, Bytes };

/// Extracts successful (200) samples per page and emits a
/// PAGE,NOT_INSTALLED,DEFAULT,ALL_HEADERS CSV. Seconds mode compares
/// response times, Bytes mode compares payload sizes.
AnalyzeResult analyze_pages(std::string_view log_text, PageMetric metric,
                            const VariantTable& variants = default_page_variants());

struct StatsSummary {
  double min = 0;
  double max = 0;
  double mean = 0;
  double median = 0;
};

/// min/max/arithmetic mean/median (average of the middle two for even
/// counts). Throws std::invalid_argument on an empty list.
StatsSummary summarize(const std::vector<double>& values);

struct HistogramBucket {
  double lower = 0;
  double upper = 0;
  std::size_t count = 0;
};

struct DiffReport {
  std::string csv;            // PAGE,<A>,<B>,DIFF rows
  std::string histogram_csv;  // BUCKET_LOW,BUCKET_HIGH,COUNT rows
  std::vector<double> differences;        // col_a - col_b, row order
  std::vector<HistogramBucket> buckets;   // 12 equal-width buckets
};

/// Per-page difference (col_a - col_b) over an analyzer CSV, with a fixed
/// 12-bucket histogram. Differences of two integer columns render as
/// integers; otherwise two decimals.
DiffReport diff_report(std::string_view csv_text, std::string_view col_a,
                       std::string_view col_b);

struct LoadJob {
  std::vector<std::string> urls;
  int concurrency = 1;
  int max_redirects = 5;
};

struct LoadResult {
  std::string log;          // siege-style lines, one per request (redirects
                            // logged separately, in hop order per URL)
  std::size_t requests = 0;
  std::size_t failures = 0;  // connection failures (logged with status 0)
};

/// Drives GET requests against the given URLs, following redirects and
/// logging every hop as its own line. Lines are ordered by input URL, then
/// hop, regardless of concurrency.
LoadResult run_load(const LoadJob& job);

}  // namespace memento

#endif  // MEMENTO_BENCH_KIT_HPP
