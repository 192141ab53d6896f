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

#include <random>

#include "memento/negotiator.hpp"

namespace {

memento::PageHistory make_history(std::size_t revisions) {
  memento::PageHistory history;
  history.title = "Bench_Page";
  std::int64_t t = 1000000000;
  for (std::size_t i = 0; i < revisions; ++i) {
    t += 3600;
    history.revisions.push_back(memento::Revision{
        static_cast<std::int64_t>(i + 1),
        memento::Instant{std::chrono::seconds{t}}, "content", "text/html"});
  }
  return history;
}

void BM_Negotiate(benchmark::State& state) {
  auto history = make_history(static_cast<std::size_t>(state.range(0)));
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::int64_t> probe(
      history.first().timestamp.time_since_epoch().count(),
      history.last().timestamp.time_since_epoch().count());
  for (auto _ : state) {
    memento::TargetDatetime target{
        memento::Instant{std::chrono::seconds{probe(rng)}},
        memento::DatetimeSource::Header};
    benchmark::DoNotOptimize(memento::negotiate(history, target));
  }
}
BENCHMARK(BM_Negotiate)->Range(8, 1 << 16);

void BM_ParseHttpDatetime(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        memento::parse_http_datetime("Sun, 22 Apr 2007 15:01:20 GMT"));
  }
}
BENCHMARK(BM_ParseHttpDatetime);

void BM_FormatHttpDatetime(benchmark::State& state) {
  memento::Instant instant{std::chrono::seconds{1177254080}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(memento::format_http_datetime(instant));
  }
}
BENCHMARK(BM_FormatHttpDatetime);

}  // namespace
