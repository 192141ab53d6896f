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

#include "memento/negotiator.hpp"

#include <algorithm>
#include <cassert>

namespace memento {

NegotiationResult negotiate(const PageHistory& history,
                            const TargetDatetime& target) {
  assert(!history.revisions.empty());
  const auto& all = history.revisions;

  // Revisions are ascending by (timestamp, rev_id), so the best candidate is
  // the one just before the first revision strictly after the target.
  auto after = std::upper_bound(all.begin(), all.end(), target.instant,
                                [](Instant t, const Revision& r) {
                                  return t < r.timestamp;
                                });
  auto pick = (after == all.begin()) ? all.begin() : after - 1;

  NegotiationResult result;
  result.selected = &*pick;
  result.first = &all.front();
  result.last = &all.back();
  result.is_exact = pick->timestamp == target.instant;
  return result;
}

}  // namespace memento
