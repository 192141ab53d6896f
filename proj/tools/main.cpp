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

// memento: command-line front door for the toolkit.
//
// `serve` hosts the datetime-negotiation server over a revision dump,
// `harvest` pulls page histories from a MediaWiki-compatible API,
// `verify-dump` re-checks dump invariants, and `negotiate` / `walk` /
// `audit` speak the client side of the protocol against any server.
// `model` evaluates the latency model; `bench` drives load and analyzes
// the resulting logs.
//
// Exit codes: 0 success, 1 protocol or data failure, 2 usage error.
// All output is stream friendly: one record per line, or CSV.

#include <algorithm>
#include <cctype>
#include <csignal>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "memento/bench_kit.hpp"
#include "memento/chronicle_store.hpp"
#include "memento/client.hpp"
#include "memento/datetime.hpp"
#include "memento/harvester.hpp"
#include "memento/http_listener.hpp"
#include "memento/perf_model.hpp"
#include "memento/server.hpp"

namespace {

using namespace memento;

std::string trimmed(const std::string& text) {
  auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return {};
  auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

// Slurps a file, or stdin when path is "-". Unreadable files are usage
// errors: the invocation named something that is not there.
std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// One non-empty, non-comment line per entry. CRLF tolerated.
std::vector<std::string> read_line_list(const std::string& path) {
  std::istringstream in(read_input(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string entry = trimmed(line);
    if (entry.empty() || entry.front() == '#') continue;
    lines.push_back(std::move(entry));
  }
  return lines;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(what + ": '" + text + "' is not a number");
}

// Minimal CSV field splitter for the analyzer outputs: fields separated by
// commas, optionally double-quoted with "" as the embedded-quote escape.
std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

// Default stream precision: shortest useful form, no trailing zeros.
std::string number_text(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

// ---------------------------------------------------------------- serve --

struct ServeOptions {
  std::string config_path;
  std::string dump_path;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::vector<std::string> overrides;  // raw key=value pairs
  std::string pattern;                 // 302 | 200
  std::string errors;                  // friendly | traditional
  int page_size = 0;                   // 0 = not given
  std::string base_url;
};

// Signals are blocked process-wide before the serving thread starts, so
// the sigwait below is the only consumer and shutdown is race free.
int cmd_serve(const ServeOptions& opts) {
  ServerConfig config;
  if (!opts.config_path.empty()) config = load_config_file(opts.config_path);
  for (const std::string& pair : opts.overrides) {
    auto eq = pair.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--set expects key=value, got '" + pair + "'");
    }
    apply_config_override(config, pair.substr(0, eq), pair.substr(eq + 1));
  }
  if (!opts.pattern.empty()) {
    apply_config_override(config, "negotiation_pattern", opts.pattern);
  }
  if (!opts.errors.empty()) {
    apply_config_override(config, "error_page_type", opts.errors);
  }
  if (opts.page_size != 0) {
    apply_config_override(config, "timemap_page_size", std::to_string(opts.page_size));
  }
  if (!opts.base_url.empty()) {
    apply_config_override(config, "base_url", opts.base_url);
  }

  Store store;
  if (!opts.dump_path.empty()) store = Store::load_dump(opts.dump_path);

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  // The advertised base_url follows the bind unless something set it
  // explicitly; a wildcard bind advertises localhost.
  const bool derive_base_url = config.base_url == ServerConfig{}.base_url;
  auto derived_base_url = [&](int bound_port) {
    std::string host_part = opts.host == "0.0.0.0" ? "localhost" : opts.host;
    return "http://" + host_part +
           (bound_port == 80 ? "" : ":" + std::to_string(bound_port));
  };

  int port = opts.port;
  if (derive_base_url && port != 0) config.base_url = derived_base_url(port);
  validate_config(config);

  std::optional<MementoService> service(std::in_place, store, config);
  HttpListener listener(*service);

  std::thread serving;
  if (port == 0) {
    port = listener.bind_ephemeral(opts.host);
    if (port < 0) {
      std::cerr << "memento: cannot bind " << opts.host << ":0\n";
      return 1;
    }
    if (derive_base_url) {
      // The port exists only after the bind, so the service is rebuilt in
      // place with the final advertised URL. Same storage, so the
      // listener's reference stays valid; serving has not started yet.
      config.base_url = derived_base_url(port);
      validate_config(config);
      service.emplace(store, config);
    }
    serving = std::thread([&] { listener.serve_bound(); });
  } else {
    serving = std::thread([&] { listener.serve(opts.host, port); });
  }

  listener.wait_until_ready();
  if (!listener.running()) {
    serving.join();
    std::cerr << "memento: cannot serve on " << opts.host << ":" << port << "\n";
    return 1;
  }

  const ServerConfig& live = service->config();
  std::cout << "listening " << opts.host << ":" << port << "\n"
            << "base_url " << live.base_url << "\n"
            << "pattern "
            << (live.negotiation_pattern == NegotiationPattern::P302 ? "302" : "200")
            << "\n"
            << "page_size " << live.timemap_page_size << "\n"
            << "errors "
            << (live.error_page_type == ErrorPageType::Friendly ? "friendly"
                                                                : "traditional")
            << "\n"
            << "pages " << store.page_count() << std::endl;

  int caught = 0;
  sigwait(&signals, &caught);
  std::cerr << "memento: caught signal " << caught << ", shutting down\n";
  listener.stop();
  serving.join();
  return 0;
}

// -------------------------------------------------------------- harvest --

struct HarvestOptions {
  std::string api;
  std::string titles_file;
  std::vector<std::string> titles;
  std::string out;
  int limit = 500;
  int delay_ms = 0;
};

int cmd_harvest(const HarvestOptions& opts) {
  HarvestJob job;
  job.api_endpoint = opts.api;
  job.batch_limit = opts.limit;
  job.polite_delay_ms = opts.delay_ms;
  if (!opts.titles_file.empty()) job.titles = read_line_list(opts.titles_file);
  job.titles.insert(job.titles.end(), opts.titles.begin(), opts.titles.end());
  if (job.titles.empty()) {
    throw std::invalid_argument("no titles: pass --titles-file or --title");
  }

  HarvestSummary summary = harvest(job, opts.out);
  std::cout << "pages " << summary.pages << "\n"
            << "revisions " << summary.revisions << "\n"
            << "requests " << summary.requests << "\n";
  for (const std::string& title : summary.missing) {
    std::cout << "missing " << title << "\n";
  }
  return 0;
}

// ---------------------------------------------------------- verify-dump --

int cmd_verify_dump(const std::string& path) {
  DumpReport report = verify_dump(path);
  for (const std::string& violation : report.violations) {
    std::cout << violation << "\n";
  }
  std::cerr << "records " << report.records << " pages " << report.pages
            << " violations " << report.violations.size() << "\n";
  return report.clean() ? 0 : 1;
}

// ------------------------------------------------------------ negotiate --

// A bare 14-digit stamp is accepted as a convenience and converted to the
// HTTP-date the protocol needs on the wire.
std::string as_http_datetime(const std::string& text) {
  if (text.size() == 14 &&
      text.find_first_not_of("0123456789") == std::string::npos) {
    auto parsed = parse_pivot(text);
    if (auto* target = std::get_if<TargetDatetime>(&parsed)) {
      return format_http_datetime(target->instant);
    }
    throw std::invalid_argument("'" + text + "' is not a valid datetime stamp");
  }
  return text;
}

int cmd_negotiate_cli(const std::string& url, const std::string& datetime) {
  NegotiationOutcome outcome = cmd_negotiate(url, as_http_datetime(datetime));
  std::cout << outcome.memento_uri << "\t" << outcome.memento_datetime << "\n";
  std::cerr << "requests " << outcome.requests << "\n";
  return 0;
}

// ----------------------------------------------------------------- walk --

int cmd_walk_cli(const std::string& url) {
  WalkOutcome outcome = cmd_walk_timemap(url);
  for (const WalkedMemento& found : outcome.mementos) {
    std::cout << found.datetime << "\t" << found.uri << "\n";
  }
  std::cerr << "mementos " << outcome.mementos.size() << " pages "
            << outcome.pages << "\n";
  return 0;
}

// ---------------------------------------------------------------- audit --

int cmd_audit_cli(const std::string& url, const std::string& datetime) {
  std::string probe = datetime.empty()
                          ? format_http_datetime(now_target().instant)
                          : as_http_datetime(datetime);
  ConformanceReport report = cmd_audit(url, probe);
  bool all_pass = true;
  for (const AuditCheck& check : report.checks) {
    all_pass = all_pass && check.pass;
    std::cout << (check.pass ? "PASS" : "FAIL") << "\t" << check.rule << "\t"
              << check.detail << "\n";
  }
  for (const ChainStep& step : report.memento_chain) {
    std::cout << "chain\t" << step.step << "\t" << step.status << "\t"
              << step.uri << "\n";
  }
  std::cout << "pattern\t" << to_string(report.pattern_detected) << "\n";
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- model --

struct ModelOptions {
  PerfParams params;
  double bits = 0;
  double bandwidth = 0;   // 0 = no transmission row
  double distance_m = 0;  // 0 = no propagation row
  double speed = kSpeedOfLight;
  bool csv = false;
};

int cmd_model(const ModelOptions& opts) {
  struct Row {
    std::string quantity;
    std::string value;
    std::string unit;
  };
  std::vector<Row> rows;
  if (opts.bandwidth > 0) {
    rows.push_back({"transmission_delay",
                    number_text(transmission_delay(opts.bits, opts.bandwidth)),
                    "s"});
  }
  if (opts.distance_m > 0) {
    rows.push_back({"propagation_delay",
                    number_text(propagation_delay(opts.distance_m, opts.speed)),
                    "s"});
  }
  rows.push_back(
      {"pattern21_duration", number_text(duration_pattern21(opts.params)), "s"});
  rows.push_back(
      {"pattern11_duration", number_text(duration_pattern11(opts.params)), "s"});
  rows.push_back(
      {"pattern11_wins", pattern11_wins(opts.params) ? "true" : "false", ""});
  auto crossover = crossover_bandwidth(opts.bits, opts.params.a, opts.params.b,
                                       opts.params.B);
  rows.push_back(
      {"crossover_bandwidth", crossover ? number_text(*crossover) : "none",
       crossover ? "bps" : ""});

  if (opts.csv) {
    std::cout << "QUANTITY,VALUE,UNIT\n";
    for (const Row& row : rows) {
      std::cout << row.quantity << "," << row.value << "," << row.unit << "\n";
    }
    return 0;
  }
  std::size_t name_width = 0;
  std::size_t value_width = 0;
  for (const Row& row : rows) {
    name_width = std::max(name_width, row.quantity.size());
    value_width = std::max(value_width, row.value.size());
  }
  for (const Row& row : rows) {
    std::cout << row.quantity << std::string(name_width - row.quantity.size() + 2, ' ')
              << row.value;
    if (!row.unit.empty()) {
      std::cout << std::string(value_width - row.value.size() + 2, ' ') << row.unit;
    }
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- bench --

struct BenchRunOptions {
  std::vector<std::string> urls;
  std::string urls_file;
  int concurrency = 1;
  int max_redirects = 5;
  std::string out;  // empty = stdout
};

int cmd_bench_run(const BenchRunOptions& opts) {
  LoadJob job;
  if (!opts.urls_file.empty()) job.urls = read_line_list(opts.urls_file);
  job.urls.insert(job.urls.end(), opts.urls.begin(), opts.urls.end());
  job.concurrency = opts.concurrency;
  job.max_redirects = opts.max_redirects;

  LoadResult result = run_load(job);
  if (opts.out.empty()) {
    std::cout << result.log;
  } else {
    std::ofstream out(opts.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + opts.out + "'");
    out << result.log;
  }
  std::cerr << "requests " << result.requests << " failures " << result.failures
            << "\n";
  return 0;
}

VariantTable parse_variant_table(const std::vector<std::string>& specs) {
  VariantTable table;
  for (const std::string& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw std::invalid_argument("--variant expects SUBSTRING=COLUMN, got '" +
                                  spec + "'");
    }
    VariantColumn column;
    column.uri_substring = spec.substr(0, eq);
    column.column = spec.substr(eq + 1);
    column.key = column.column;
    for (char& c : column.key) c = static_cast<char>(std::tolower(c));
    table.push_back(std::move(column));
  }
  return table;
}

int report_analysis(const AnalyzeResult& result) {
  std::cout << result.csv;
  for (const std::string& diagnostic : result.diagnostics) {
    std::cerr << diagnostic << "\n";
  }
  if (result.skipped_lines != 0) {
    std::cerr << "skipped " << result.skipped_lines << "\n";
  }
  return 0;
}

int cmd_bench_timegate(const std::string& log_path,
                       const std::vector<std::string>& variant_specs) {
  std::string log = read_input(log_path);
  VariantTable table = variant_specs.empty() ? default_timegate_variants()
                                             : parse_variant_table(variant_specs);
  return report_analysis(analyze_timegate(log, table));
}

int cmd_bench_pages(const std::string& log_path, const std::string& metric,
                    const std::vector<std::string>& variant_specs) {
  std::string log = read_input(log_path);
  PageMetric parsed = PageMetric::Seconds;
  if (metric == "bytes") {
    parsed = PageMetric::Bytes;
  } else if (metric != "secs") {
    throw std::invalid_argument("--metric must be 'secs' or 'bytes', got '" +
                                metric + "'");
  }
  VariantTable table = variant_specs.empty() ? default_page_variants()
                                             : parse_variant_table(variant_specs);
  return report_analysis(analyze_pages(log, parsed, table));
}

// Values arrive either as one number per line or as a named column of an
// analyzer CSV.
int cmd_bench_stats(const std::string& path, const std::string& column) {
  std::istringstream in(read_input(path));
  std::vector<double> values;
  std::string line;
  if (column.empty()) {
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string entry = trimmed(line);
      if (entry.empty()) continue;
      values.push_back(
          parse_number(entry, "line " + std::to_string(line_no)));
    }
  } else {
    if (!std::getline(in, line)) {
      throw std::invalid_argument("input has no header row");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> header = split_csv_row(line);
    std::size_t index = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == column) index = i;
    }
    if (index == header.size()) {
      throw std::invalid_argument("no column '" + column + "' in header");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trimmed(line).empty()) continue;
      std::vector<std::string> fields = split_csv_row(line);
      if (fields.size() != header.size()) {
        throw std::invalid_argument("row " + std::to_string(line_no) + " has " +
                                    std::to_string(fields.size()) +
                                    " fields, header has " +
                                    std::to_string(header.size()));
      }
      values.push_back(
          parse_number(fields[index], "row " + std::to_string(line_no)));
    }
  }
  StatsSummary stats = summarize(values);
  std::cout << "count " << values.size() << "\n"
            << "min " << number_text(stats.min) << "\n"
            << "max " << number_text(stats.max) << "\n"
            << "mean " << number_text(stats.mean) << "\n"
            << "median " << number_text(stats.median) << "\n";
  return 0;
}

int cmd_bench_diff(const std::string& path, const std::string& col_a,
                   const std::string& col_b, bool histogram) {
  DiffReport report = diff_report(read_input(path), col_a, col_b);
  std::cout << (histogram ? report.histogram_csv : report.csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Memento toolkit: datetime-negotiation server, MediaWiki harvester,\n"
      "protocol client, latency model, and load-test kit"};
  app.require_subcommand(1);
  int rc = 0;

  // serve
  auto serve_opts = std::make_shared<ServeOptions>();
  CLI::App* serve = app.add_subcommand(
      "serve", "Host the negotiation server over a revision dump");
  serve->add_option("--config", serve_opts->config_path,
                    "key=value config file")
      ->envname("MEMENTO_CONFIG");
  serve->add_option("--dump", serve_opts->dump_path, "revision dump to load");
  serve->add_option("--host", serve_opts->host, "bind address")
      ->capture_default_str();
  serve->add_option("--port", serve_opts->port, "bind port; 0 picks a free one")
      ->capture_default_str();
  serve->add_option("--set", serve_opts->overrides,
                    "config override, key=value; repeatable");
  serve->add_option("--pattern", serve_opts->pattern,
                    "negotiation pattern: 302 or 200");
  serve->add_option("--errors", serve_opts->errors,
                    "error pages: friendly or traditional");
  serve->add_option("--page-size", serve_opts->page_size,
                    "version-map entries per page");
  serve->add_option("--base-url", serve_opts->base_url,
                    "advertised URL (default: derived from host and port)");
  serve->callback([serve_opts, &rc] { rc = cmd_serve(*serve_opts); });

  // harvest
  auto harvest_opts = std::make_shared<HarvestOptions>();
  CLI::App* harvest = app.add_subcommand(
      "harvest", "Pull page histories from a MediaWiki-compatible API");
  harvest->add_option("--api", harvest_opts->api, "API endpoint URL")
      ->required();
  harvest->add_option("--titles-file", harvest_opts->titles_file,
                      "file of page titles, one per line");
  harvest->add_option("--title", harvest_opts->titles,
                      "page title; repeatable");
  harvest->add_option("--out", harvest_opts->out, "dump file to write")
      ->required();
  harvest->add_option("--limit", harvest_opts->limit,
                      "revisions per request, 1..500")
      ->capture_default_str();
  harvest->add_option("--delay", harvest_opts->delay_ms,
                      "milliseconds between requests")
      ->capture_default_str();
  harvest->callback([harvest_opts, &rc] { rc = cmd_harvest(*harvest_opts); });

  // verify-dump
  auto dump_path = std::make_shared<std::string>();
  CLI::App* verify = app.add_subcommand(
      "verify-dump", "Re-check a revision dump's invariants");
  verify->add_option("path", *dump_path, "dump file")->required();
  verify->callback([dump_path, &rc] { rc = cmd_verify_dump(*dump_path); });

  // negotiate
  auto neg_url = std::make_shared<std::string>();
  auto neg_datetime = std::make_shared<std::string>();
  CLI::App* negotiate = app.add_subcommand(
      "negotiate", "Ask a page for its version nearest a datetime");
  negotiate->add_option("url", *neg_url, "page URL")->required();
  negotiate
      ->add_option("datetime", *neg_datetime,
                   "HTTP-date or 14-digit YYYYMMDDHHMMSS stamp")
      ->required();
  negotiate->callback(
      [neg_url, neg_datetime, &rc] { rc = cmd_negotiate_cli(*neg_url, *neg_datetime); });

  // walk
  auto walk_url = std::make_shared<std::string>();
  CLI::App* walk = app.add_subcommand(
      "walk", "Enumerate every memento behind a page or version map");
  walk->add_option("url", *walk_url, "page or version-map URL")->required();
  walk->callback([walk_url, &rc] { rc = cmd_walk_cli(*walk_url); });

  // audit
  auto audit_url = std::make_shared<std::string>();
  auto audit_datetime = std::make_shared<std::string>();
  CLI::App* audit = app.add_subcommand(
      "audit", "Check a live server against the protocol's observable rules");
  audit->add_option("url", *audit_url, "page URL")->required();
  audit->add_option("datetime", *audit_datetime,
                    "probe datetime (default: now)");
  audit->callback([audit_url, audit_datetime, &rc] {
    rc = cmd_audit_cli(*audit_url, *audit_datetime);
  });

  // model
  auto model_opts = std::make_shared<ModelOptions>();
  CLI::App* model = app.add_subcommand(
      "model", "Evaluate the negotiation-pattern latency model");
  model->add_option("--a", model_opts->params.a,
                    "seconds: original page response generation");
  model->add_option("--b", model_opts->params.b,
                    "seconds: separate redirect generation");
  model->add_option("--B", model_opts->params.B,
                    "seconds: combined page/redirect generation");
  model->add_option("--M", model_opts->params.M,
                    "seconds: memento response generation");
  model->add_option("--rtt-a", model_opts->params.rtt_a,
                    "seconds: round trip for the page request");
  model->add_option("--rtt-b", model_opts->params.rtt_b,
                    "seconds: round trip for the redirect request");
  model->add_option("--rtt-B", model_opts->params.rtt_B,
                    "seconds: round trip for the combined request");
  model->add_option("--rtt-M", model_opts->params.rtt_M,
                    "seconds: round trip for the memento request");
  model->add_option("--bits", model_opts->bits,
                    "payload size in bits, for delay and crossover rows")
      ->check(CLI::NonNegativeNumber);
  model->add_option("--bandwidth", model_opts->bandwidth,
                    "bits per second; adds a transmission_delay row")
      ->check(CLI::PositiveNumber);
  model->add_option("--distance", model_opts->distance_m,
                    "meters; adds a propagation_delay row")
      ->check(CLI::NonNegativeNumber);
  model->add_option("--speed", model_opts->speed,
                    "signal speed in m/s (default: speed of light)")
      ->check(CLI::PositiveNumber);
  model->add_flag("--csv", model_opts->csv, "CSV instead of aligned table");
  model->callback([model_opts, &rc] { rc = cmd_model(*model_opts); });

  // bench
  CLI::App* bench = app.add_subcommand(
      "bench", "Load driver and Siege-style log analyzers");
  bench->require_subcommand(1);

  auto run_opts = std::make_shared<BenchRunOptions>();
  CLI::App* bench_run = bench->add_subcommand(
      "run", "Drive GET requests and emit a Siege-style log");
  bench_run->add_option("--url", run_opts->urls, "target URL; repeatable");
  bench_run->add_option("--urls-file", run_opts->urls_file,
                        "file of URLs, one per line");
  bench_run->add_option("--concurrency", run_opts->concurrency, "worker count")
      ->capture_default_str();
  bench_run
      ->add_option("--max-redirects", run_opts->max_redirects,
                   "redirect hops to follow per URL")
      ->capture_default_str();
  bench_run->add_option("--out", run_opts->out, "log file (default: stdout)");
  bench_run->callback([run_opts, &rc] { rc = cmd_bench_run(*run_opts); });

  auto tg_log = std::make_shared<std::string>("-");
  auto tg_variants = std::make_shared<std::vector<std::string>>();
  CLI::App* bench_tg = bench->add_subcommand(
      "timegate", "Per-page CSV of redirect timings across two deployments");
  bench_tg->add_option("log", *tg_log, "log file, or - for stdin")
      ->capture_default_str();
  bench_tg->add_option("--variant", *tg_variants,
                       "URI classifier, SUBSTRING=COLUMN; repeatable");
  bench_tg->callback(
      [tg_log, tg_variants, &rc] { rc = cmd_bench_timegate(*tg_log, *tg_variants); });

  auto pg_log = std::make_shared<std::string>("-");
  auto pg_metric = std::make_shared<std::string>("secs");
  auto pg_variants = std::make_shared<std::vector<std::string>>();
  CLI::App* bench_pg = bench->add_subcommand(
      "pages", "Per-page CSV of successful-response timings or sizes");
  bench_pg->add_option("log", *pg_log, "log file, or - for stdin")
      ->capture_default_str();
  bench_pg->add_option("--metric", *pg_metric, "secs or bytes")
      ->capture_default_str();
  bench_pg->add_option("--variant", *pg_variants,
                       "URI classifier, SUBSTRING=COLUMN; repeatable");
  bench_pg->callback([pg_log, pg_metric, pg_variants, &rc] {
    rc = cmd_bench_pages(*pg_log, *pg_metric, *pg_variants);
  });

  auto stats_path = std::make_shared<std::string>("-");
  auto stats_column = std::make_shared<std::string>();
  CLI::App* bench_stats = bench->add_subcommand(
      "stats", "min/max/mean/median of a value list or CSV column");
  bench_stats->add_option("values", *stats_path,
                          "file of numbers (or CSV), - for stdin")
      ->capture_default_str();
  bench_stats->add_option("--column", *stats_column,
                          "read this CSV column instead of bare numbers");
  bench_stats->callback([stats_path, stats_column, &rc] {
    rc = cmd_bench_stats(*stats_path, *stats_column);
  });

  auto diff_path = std::make_shared<std::string>("-");
  auto diff_a = std::make_shared<std::string>();
  auto diff_b = std::make_shared<std::string>();
  auto diff_histogram = std::make_shared<bool>(false);
  CLI::App* bench_diff = bench->add_subcommand(
      "diff", "Per-page difference of two CSV columns, or its histogram");
  bench_diff->add_option("csv", *diff_path, "analyzer CSV, - for stdin")
      ->capture_default_str();
  bench_diff->add_option("--a", *diff_a, "minuend column")->required();
  bench_diff->add_option("--b", *diff_b, "subtrahend column")->required();
  bench_diff->add_flag("--histogram", *diff_histogram,
                       "emit the 12-bucket histogram instead");
  bench_diff->callback([diff_path, diff_a, diff_b, diff_histogram, &rc] {
    rc = cmd_bench_diff(*diff_path, *diff_a, *diff_b, *diff_histogram);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "memento: config: " << e.what() << "\n";
    return 2;
  } catch (const ClientError& e) {
    std::cerr << "memento: " << e.what() << "\n";
    return 1;
  } catch (const HarvestError& e) {
    std::cerr << "memento: " << e.what() << "\n";
    return 1;
  } catch (const DumpError& e) {
    std::cerr << "memento: " << e.what() << "\n";
    return e.kind == DumpError::Kind::Io ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "memento: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "memento: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "memento: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
