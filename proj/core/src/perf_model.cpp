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

#include "memento/perf_model.hpp"

#include <stdexcept>

namespace memento {

double duration_pattern21(const PerfParams& params) {
  return params.a + params.rtt_a + params.b + params.rtt_b + params.M +
         params.rtt_M;
}

double duration_pattern11(const PerfParams& params) {
  return params.B + params.rtt_B + params.M + params.rtt_M;
}

bool pattern11_wins(const PerfParams& params) {
  return params.B < params.a + params.b + params.rtt_a;
}

double rtt(double transmission_delay_s, double propagation_delay_s) {
  return transmission_delay_s + propagation_delay_s;
}

double transmission_delay(double payload_bits, double bandwidth_bps) {
  if (bandwidth_bps <= 0) {
    throw std::domain_error("bandwidth must be positive");
  }
  return payload_bits / bandwidth_bps;
}

double propagation_delay(double distance_m, double speed_mps) {
  if (speed_mps <= 0) {
    throw std::domain_error("propagation speed must be positive");
  }
  return distance_m / speed_mps;
}

double propagation_distance(double delay_s, double speed_mps) {
  return delay_s * speed_mps;
}

std::optional<double> crossover_bandwidth(double payload_bits, double a,
                                          double b, double B) {
  if (B <= a + b) return std::nullopt;
  return payload_bits / (B - a - b);
}

bool pattern11_wins_at_equal_processing(double a, double transmission_delay_s) {
  return 0 < a + transmission_delay_s;
}

}  // namespace memento
