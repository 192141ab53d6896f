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

// Client-side time travel: discovers a page's TimeGate from its Link
// header, negotiates a memento for a wished datetime, walks paged TimeMaps
// to a complete memento list, and audits a live server's protocol conduct.
// Everything here talks real HTTP, so it works against any Memento server,
// not just this toolkit's.

#ifndef MEMENTO_CLIENT_HPP
#define MEMENTO_CLIENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "memento/datetime.hpp"

namespace memento {

/// Why a client command could not finish. NoTimeGateAdvertised and
/// NoTimeMapAdvertised are discovery failures on the starting page;
/// NegotiationFailed carries the unexpected status; CycleDetected means
/// the TimeMap neighbor graph kept producing new page URIs past the
/// walker's budget instead of converging.
class ClientError : public std::runtime_error {
 public:
  enum class Kind {
    Unreachable,
    NoTimeGateAdvertised,
    NoTimeMapAdvertised,
    NegotiationFailed,
    CycleDetected,
  };

  ClientError(Kind kind, std::string message, int status = 0)
      : std::runtime_error(std::move(message)), kind(kind), status(status) {}

  Kind kind;
  int status;  // HTTP status for NegotiationFailed; 0 otherwise
};

/// Where datetime negotiation landed: the memento's URI and the
/// Memento-Datetime it was served with. requests counts HTTP round trips,
/// three for a redirecting TimeGate, two when the page negotiates in place.
struct NegotiationOutcome {
  std::string memento_uri;
  std::string memento_datetime;
  int requests = 0;

  friend bool operator==(const NegotiationOutcome&,
                         const NegotiationOutcome&) = default;
};

/// Asks the page at url for the version nearest the given HTTP datetime:
/// reads the timegate relation from the page's Link header, sends
/// Accept-Datetime there, and follows a 302 Location or reads the in-place
/// Content-Location. Throws ClientError on unreachable hosts, pages that
/// advertise no timegate, and exchanges that end without a memento.
NegotiationOutcome cmd_negotiate(const std::string& url,
                                 const std::string& datetime);

/// One memento found while walking: when it was captured and where it
/// lives. instant is the parsed datetime, kept alongside the text so
/// callers can sort or print without re-parsing.
struct WalkedMemento {
  Instant instant{};
  std::string datetime;
  std::string uri;

  friend bool operator==(const WalkedMemento&, const WalkedMemento&) = default;
};

/// Everything a TimeMap walk discovered, ascending by (instant, uri),
/// de-duplicated by URI, plus how many TimeMap pages were fetched.
struct WalkOutcome {
  std::vector<WalkedMemento> mementos;
  int pages = 0;
};

/// Enumerates the complete history behind url, which may be a page (its
/// timemap relation is discovered from the Link header) or a TimeMap URI
/// itself. Neighbor relations are followed toward older and newer windows
/// until both directions are exhausted; neighbors that do not declare
/// from/until attributes are followed both ways, which stays complete but
/// may fetch overlapping windows. A walk that exceeds 10,000 pages is
/// diagnosed as a cycle. Throws ClientError.
WalkOutcome cmd_walk_timemap(const std::string& url);

/// Which negotiation style a live server exhibited: a redirecting gate at
/// the page URI itself, in-place negotiation at the page, a redirecting
/// gate at a separate URI, or nothing recognizable.
enum class DetectedPattern { Pattern11, Pattern12, Pattern21, None };

/// Text for a detected pattern: "p1.1", "p1.2", "p2.1" or "none".
std::string to_string(DetectedPattern pattern);

struct AuditCheck {
  std::string rule;
  bool pass = false;
  std::string detail;

  friend bool operator==(const AuditCheck&, const AuditCheck&) = default;
};

struct ChainStep {
  std::string step;  // "original", "timegate", "memento", "timemap"
  std::string uri;
  int status = 0;

  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

/// Outcome of a conformance audit. pattern_detected is None only when at
/// least one check failed; checks appear in the order they ran; the chain
/// records each URI the audit dereferenced and what it answered.
struct ConformanceReport {
  DetectedPattern pattern_detected = DetectedPattern::None;
  std::vector<AuditCheck> checks;
  std::vector<ChainStep> memento_chain;
};

/// Exercises a live server's datetime negotiation against the protocol's
/// observable rules: the page advertises timegate and timemap relations,
/// the gate varies on Accept-Datetime and yields a memento that carries
/// Memento-Datetime, malformed Accept-Datetime values are rejected, and
/// the TimeMap parses with self bounds that cover its mementos. First/last
/// relations are reported informationally, never as failures. Throws
/// ClientError only when url itself is unreachable.
ConformanceReport cmd_audit(const std::string& url,
                            const std::string& datetime);

}  // namespace memento

#endif  // MEMENTO_CLIENT_HPP
