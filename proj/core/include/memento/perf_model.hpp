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

#ifndef MEMENTO_PERF_MODEL_HPP
#define MEMENTO_PERF_MODEL_HPP

#include <optional>

namespace memento {

/// Analytical model of datetime-negotiation latency. Two deployment
/// patterns are compared:
///
///   distinct-TimeGate (three requests):
///     original page (a) -> TimeGate redirect (b) -> memento (M)
///   self-TimeGate redirect (two requests):
///     combined page+TimeGate redirect (B) -> memento (M)
///
/// The self-TimeGate variant folds full page rendering into its redirect
/// step, which is why B is typically much larger than b. Queuing and
/// server-side processing delay outside these terms are treated as zero.
struct PerfParams {
  double a = 0;      // seconds: original page response generation
  double b = 0;      // seconds: distinct TimeGate redirect generation
  double B = 0;      // seconds: combined page/TimeGate redirect generation
  double M = 0;      // seconds: memento response generation
  double rtt_a = 0;  // seconds: round trip for the original page request
  double rtt_b = 0;  // seconds: round trip for the TimeGate request
  double rtt_B = 0;  // seconds: round trip for the combined request
  double rtt_M = 0;  // seconds: round trip for the memento request
};

/// Total wall time of the three-request exchange: a + rtt_a + b + rtt_b +
/// M + rtt_M.
double duration_pattern21(const PerfParams& params);

/// Total wall time of the two-request exchange: B + rtt_B + M + rtt_M.
double duration_pattern11(const PerfParams& params);

/// True iff the two-request pattern finishes first, i.e. B < a + b + rtt_a,
/// assuming rtt_B == rtt_b (same endpoints) and cancelling the shared
/// memento step.
bool pattern11_wins(const PerfParams& params);

/// Round-trip time from its two components.
double rtt(double transmission_delay_s, double propagation_delay_s);

/// Time to push payload_bits through a bandwidth_bps link. bandwidth must
/// be positive.
double transmission_delay(double payload_bits, double bandwidth_bps);

/// Signal travel time over distance_m at propagation speed speed_mps.
double propagation_delay(double distance_m, double speed_mps);

/// Distance a signal covers in delay_s at speed_mps (inverse of
/// propagation_delay).
double propagation_distance(double delay_s, double speed_mps);

/// The bandwidth below which transmission delay makes the two-request
/// pattern faster: R = N / (B - a - b). Empty when B <= a + b, meaning the
/// two-request pattern's processing cost alone already exceeds the saved
/// round trip, so no finite bandwidth rescues it.
std::optional<double> crossover_bandwidth(double payload_bits, double a,
                                          double b, double B);

/// The degenerate comparison with equal processing cost on both patterns
/// (B == b): the inequality collapses to 0 < a + transmission delay, so the
/// two-request pattern wins whenever any request cost exists at all.
bool pattern11_wins_at_equal_processing(double a, double transmission_delay_s);

/// Speed of light in vacuum, meters per second.
inline constexpr double kSpeedOfLight = 299792458.0;

}  // namespace memento

#endif  // MEMENTO_PERF_MODEL_HPP
