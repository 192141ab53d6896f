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

#include "memento/bench_kit.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <thread>

#include "httplib.h"
#include "http_support.hpp"

namespace memento {

namespace {

std::string strip_ansi(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\x1b' && i + 1 < line.size() && line[i + 1] == '[') {
      i += 2;
      while (i < line.size() && !std::isalpha(static_cast<unsigned char>(line[i]))) {
        ++i;
      }
      continue;  // the final letter of the escape is consumed by the loop
    }
    out += line[i];
  }
  return out;
}

const std::regex& record_pattern() {
  static const std::regex pattern(
      R"(^HTTP/1\.[01][ \t]+([0-9]+)[ \t]+([0-9]+(?:\.[0-9]+)?) secs:[ \t]*([0-9]+) bytes ==>[ \t]*([A-Z]+)[ \t]+(\S.*)$)");
  return pattern;
}

std::optional<LogRecord> parse_line(std::string_view raw) {
  std::string line = strip_ansi(raw);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
    line.pop_back();
  }
  std::smatch match;
  if (!std::regex_match(line, match, record_pattern())) return std::nullopt;
  LogRecord record;
  try {
    record.status = std::stoi(match[1].str());
    record.secs_text = match[2].str();
    record.secs = std::stod(record.secs_text);
    record.bytes_text = match[3].str();
    record.bytes = std::stoll(record.bytes_text);
  } catch (const std::exception&) {
    return std::nullopt;  // digit runs too long for their types
  }
  record.method = match[4].str();
  record.uri = match[5].str();
  return record;
}

const VariantColumn* classify(const LogRecord& record, const VariantTable& table) {
  const VariantColumn* best = nullptr;
  for (const auto& variant : table) {
    if (record.uri.find(variant.uri_substring) == std::string::npos) continue;
    if (!best || variant.uri_substring.size() > best->uri_substring.size()) {
      best = &variant;
    }
  }
  return best;
}

std::string quote_csv_field(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Shared body of the two analyzers: collect one value per (page, variant),
// then emit rows for pages complete across every column.
AnalyzeResult analyze(std::string_view log_text, int wanted_status,
                      const VariantTable& variants,
                      const std::string LogRecord::*value_field) {
  AnalyzeResult result;
  SiegeLog log = parse_siege_log(log_text);
  result.skipped_lines = log.skipped;

  std::vector<std::string> page_order;
  std::map<std::string, std::map<std::string, std::string>> stats;

  for (auto& record : log.records) {
    if (record.status != wanted_status) continue;
    auto page = page_name_from_uri(record.uri);
    if (!page) {
      result.diagnostics.push_back("FAILED TO FIND PAGE NAME");
      continue;
    }
    record.page = *page;
    if (stats.find(*page) == stats.end()) {
      page_order.push_back(*page);
      stats[*page];
    }
    const VariantColumn* variant = classify(record, variants);
    if (!variant) continue;  // the page stays on record as incomplete
    record.variant = variant->column;
    stats[*page][variant->key] = record.*value_field;
  }

  std::string header = "PAGE";
  for (const auto& variant : variants) {
    header += ',';
    header += variant.column;
  }
  result.csv = header + "\n";

  for (const auto& page : page_order) {
    const auto& columns = stats[page];
    std::vector<std::string> missing;
    for (const auto& variant : variants) {
      if (columns.find(variant.key) == columns.end()) missing.push_back(variant.key);
    }
    if (missing.empty()) {
      std::string row = quote_csv_field(page);
      for (const auto& variant : variants) {
        row += ',';
        row += columns.at(variant.key);
      }
      result.csv += row + "\n";
    } else {
      std::string joined;
      for (std::size_t i = 0; i < missing.size(); ++i) {
        if (i) joined += ',';
        joined += missing[i];
      }
      result.diagnostics.push_back("Page '" + page +
                                   "' is missing statistics for [" + joined + "]");
    }
  }
  return result;
}

bool integral_text(std::string_view text) {
  return text.find('.') == std::string_view::npos;
}

std::string format_number(double value, bool integral) {
  char buf[64];
  if (integral) {
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(std::llround(value)));
  } else {
    std::snprintf(buf, sizeof(buf), "%.2f", value);
  }
  return buf;
}

// Splits on commas outside double quotes; fields keep their quotes so
// re-emitting them preserves the input text byte for byte.
std::vector<std::string> split_csv_row(std::string_view row) {
  std::vector<std::string> fields;
  std::string current;
  bool in_quotes = false;
  for (char c : row) {
    if (c == '"') {
      in_quotes = !in_quotes;
      current += c;
    } else if (c == ',' && !in_quotes) {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}


}  // namespace

SiegeLog parse_siege_log(std::string_view text) {
  SiegeLog log;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = (end == std::string_view::npos)
                                ? text.substr(start)
                                : text.substr(start, end - start);
    if (!line.empty()) {
      if (auto record = parse_line(line)) {
        log.records.push_back(std::move(*record));
      } else {
        ++log.skipped;
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return log;
}

std::string emit_siege_line(const LogRecord& record) {
  char prefix[64];
  std::snprintf(prefix, sizeof(prefix), "HTTP/1.1 %d %6.2f secs: %7lld bytes ==> ",
                record.status, record.secs,
                static_cast<long long>(record.bytes));
  return std::string(prefix) + record.method + "  " + record.uri;
}

std::optional<std::string> page_name_from_uri(std::string_view uri) {
  std::size_t query_start = uri.find('?');
  if (query_start != std::string_view::npos) {
    std::string_view query = uri.substr(query_start + 1);
    while (!query.empty()) {
      std::size_t amp = query.find('&');
      std::string_view param =
          (amp == std::string_view::npos) ? query : query.substr(0, amp);
      if (param.substr(0, 6) == "title=") {
        std::string_view value = param.substr(6);
        if (!value.empty()) return std::string(value);
      }
      if (amp == std::string_view::npos) break;
      query = query.substr(amp + 1);
    }
  }
  std::string_view path = uri.substr(0, query_start);
  std::size_t slash = path.rfind('/');
  std::string_view last =
      (slash == std::string_view::npos) ? path : path.substr(slash + 1);
  if (last.empty()) return std::nullopt;
  return std::string(last);
}

VariantTable default_timegate_variants() {
  return {
      {"demo-special", "SPECIAL", "special"},
      {"demo", "DEFAULT", "default"},
  };
}

VariantTable default_page_variants() {
  return {
      {"demo-not-installed", "NOT_INSTALLED", "not-installed"},
      {"demo", "DEFAULT", "default"},
      {"demo-302-recommended-relations", "ALL_HEADERS", "all-headers"},
  };
}

AnalyzeResult analyze_timegate(std::string_view log_text,
                               const VariantTable& variants) {
  return analyze(log_text, 302, variants, &LogRecord::secs_text);
}

AnalyzeResult analyze_pages(std::string_view log_text, PageMetric metric,
                            const VariantTable& variants) {
  return analyze(log_text, 200, variants,
                 metric == PageMetric::Seconds ? &LogRecord::secs_text
                                               : &LogRecord::bytes_text);
}

StatsSummary summarize(const std::vector<double>& values) {
  if (values.empty()) {
    throw std::invalid_argument("cannot summarize an empty list");
  }
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  StatsSummary summary;
  summary.min = sorted.front();
  summary.max = sorted.back();
  summary.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
                 static_cast<double>(sorted.size());
  std::size_t n = sorted.size();
  summary.median = (n % 2 == 1)
                       ? sorted[n / 2]
                       : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  return summary;
}

DiffReport diff_report(std::string_view csv_text, std::string_view col_a,
                       std::string_view col_b) {
  DiffReport report;
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= csv_text.size()) {
    std::size_t end = csv_text.find('\n', start);
    std::string_view line = (end == std::string_view::npos)
                                ? csv_text.substr(start)
                                : csv_text.substr(start, end - start);
    if (!line.empty()) lines.emplace_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (lines.empty()) throw std::invalid_argument("csv has no header row");

  auto header = split_csv_row(lines[0]);
  std::size_t index_a = header.size();
  std::size_t index_b = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == col_a) index_a = i;
    if (header[i] == col_b) index_b = i;
  }
  if (index_a == header.size() || index_b == header.size()) {
    throw std::invalid_argument("csv is missing column '" +
                                std::string(index_a == header.size() ? col_a : col_b) +
                                "'");
  }

  struct Row {
    std::string page;
    std::string a_text;
    std::string b_text;
    double diff;
  };
  std::vector<Row> rows;
  bool integral = true;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_csv_row(lines[i]);
    if (fields.size() != header.size()) {
      throw std::invalid_argument("csv row " + std::to_string(i + 1) +
                                  " has wrong field count");
    }
    Row row;
    row.page = fields[0];
    row.a_text = fields[index_a];
    row.b_text = fields[index_b];
    row.diff = std::stod(row.a_text) - std::stod(row.b_text);
    integral = integral && integral_text(row.a_text) && integral_text(row.b_text);
    rows.push_back(std::move(row));
    report.differences.push_back(rows.back().diff);
  }

  report.csv = "PAGE," + std::string(col_a) + "," + std::string(col_b) + ",DIFF\n";
  for (const auto& row : rows) {
    report.csv += row.page + "," + row.a_text + "," + row.b_text + "," +
                  format_number(row.diff, integral) + "\n";
  }

  report.histogram_csv = "BUCKET_LOW,BUCKET_HIGH,COUNT\n";
  if (!report.differences.empty()) {
    const std::size_t bucket_count = 12;
    double lo = *std::min_element(report.differences.begin(), report.differences.end());
    double hi = *std::max_element(report.differences.begin(), report.differences.end());
    double width = (hi - lo) / static_cast<double>(bucket_count);
    report.buckets.resize(bucket_count);
    for (std::size_t i = 0; i < bucket_count; ++i) {
      report.buckets[i].lower = lo + width * static_cast<double>(i);
      report.buckets[i].upper = lo + width * static_cast<double>(i + 1);
    }
    report.buckets.back().upper = hi;
    for (double diff : report.differences) {
      std::size_t index = 0;
      if (width > 0) {
        index = static_cast<std::size_t>((diff - lo) / width);
        if (index >= bucket_count) index = bucket_count - 1;
      }
      ++report.buckets[index].count;
    }
    for (const auto& bucket : report.buckets) {
      char line[96];
      std::snprintf(line, sizeof(line), "%.6g,%.6g,%zu", bucket.lower,
                    bucket.upper, bucket.count);
      report.histogram_csv += std::string(line) + "\n";
    }
  }
  return report;
}

LoadResult run_load(const LoadJob& job) {
  std::vector<std::vector<LogRecord>> per_url(job.urls.size());

  auto fetch_chain = [&job](const std::string& start_url) {
    std::vector<LogRecord> chain;
    std::string current = start_url;
    for (int hop = 0; hop <= job.max_redirects; ++hop) {
      LogRecord record;
      record.method = "GET";
      auto split = detail::split_url(current);
      if (!split) {
        record.uri = current;
        chain.push_back(std::move(record));  // status 0: unusable URL
        break;
      }
      record.uri = split->target;
      httplib::Client client(split->origin);
      client.set_follow_location(false);
      auto started = std::chrono::steady_clock::now();
      httplib::Result response = client.Get(split->target);
      std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - started;
      record.secs = elapsed.count();
      char secs_text[32];
      std::snprintf(secs_text, sizeof(secs_text), "%.2f", record.secs);
      record.secs_text = secs_text;
      if (!response) {
        chain.push_back(std::move(record));  // status 0: connection failure
        break;
      }
      record.status = response->status;
      record.bytes = static_cast<std::int64_t>(response->body.size());
      record.bytes_text = std::to_string(record.bytes);
      bool redirect = response->status >= 300 && response->status < 400 &&
                      response->has_header("Location");
      std::string location =
          redirect ? response->get_header_value("Location") : std::string();
      chain.push_back(std::move(record));
      if (!redirect) break;
      auto next = detail::resolve_location(split->origin, location);
      if (!next) break;
      current = *next;
    }
    return chain;
  };

  unsigned workers = static_cast<unsigned>(
      std::clamp<int>(job.concurrency, 1, static_cast<int>(std::max<std::size_t>(
                                              job.urls.size(), 1))));
  std::atomic<std::size_t> next_url{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        std::size_t i = next_url.fetch_add(1);
        if (i >= job.urls.size()) break;
        per_url[i] = fetch_chain(job.urls[i]);
      }
    });
  }
  for (auto& thread : pool) thread.join();

  LoadResult result;
  for (const auto& chain : per_url) {
    for (const auto& record : chain) {
      result.log += emit_siege_line(record) + "\n";
      ++result.requests;
      if (record.status == 0) ++result.failures;
    }
  }
  return result;
}

}  // namespace memento
