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

#include <benchmark/benchmark.h>

#include "memento/chronicle_store.hpp"
#include "memento/datetime.hpp"

namespace {

memento::Store make_store(std::size_t revisions) {
  std::vector<memento::DumpRecord> records;
  std::int64_t t = 1000000000;
  for (std::size_t i = 0; i < revisions; ++i) {
    t += 3600;
    records.push_back(memento::DumpRecord{
        "Bench_Page", static_cast<std::int64_t>(i + 1),
        memento::format_pivot(memento::Instant{std::chrono::seconds{t}}),
        "text/html", "content body"});
  }
  return memento::Store::from_records(records);
}

void BM_RangeBefore(benchmark::State& state) {
  auto store = make_store(static_cast<std::size_t>(state.range(0)));
  auto history = store.find_history("Bench_Page");
  auto pivot = history->revisions[history->revisions.size() / 2].timestamp;
  for (auto _ : state) {
    benchmark::DoNotOptimize(store.range_before("Bench_Page", pivot, 500));
  }
}
BENCHMARK(BM_RangeBefore)->Range(64, 1 << 16);

void BM_ParseDumpLine(benchmark::State& state) {
  std::string line =
      "Bench_Page\t12345\t20130223015523\ttext/html\tsome content with \\t "
      "escapes and a longer tail of ordinary words";
  for (auto _ : state) {
    benchmark::DoNotOptimize(memento::parse_dump_line(line, 1));
  }
}
BENCHMARK(BM_ParseDumpLine);

}  // namespace
