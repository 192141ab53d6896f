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

#ifndef MEMENTO_NEGOTIATOR_HPP
#define MEMENTO_NEGOTIATOR_HPP

#include "memento/chronicle_store.hpp"
#include "memento/datetime.hpp"

namespace memento {

/// Outcome of datetime negotiation against one page history. All revision
/// references point into the history passed to negotiate() and stay valid
/// as long as it does.
struct NegotiationResult {
  const Revision* selected = nullptr;
  const Revision* first = nullptr;
  const Revision* last = nullptr;
  bool is_exact = false;  // selected.timestamp == target instant
};

/// Picks the best memento for a target datetime.
///
/// Selection rule: the revision with the greatest (timestamp, rev_id) whose
/// timestamp is at or before the target. Targets earlier than the whole
/// history clamp to the first revision. "Closest in either direction" is a
/// defensible alternative reading of the protocol; at-or-before is chosen
/// because it never shows the reader content newer than the time they asked
/// for, and it makes selection monotone in the target.
///
/// Precondition: history has at least one revision.
NegotiationResult negotiate(const PageHistory& history, const TargetDatetime& target);

}  // namespace memento

#endif  // MEMENTO_NEGOTIATOR_HPP
