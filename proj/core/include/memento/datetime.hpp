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

#ifndef MEMENTO_DATETIME_HPP
#define MEMENTO_DATETIME_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace memento {

/// UTC instant with 1-second resolution. All protocol datetimes (HTTP-dates,
/// 14-digit pivots, revision timestamps) round-trip through this type.
using Instant = std::chrono::sys_seconds;

enum class DatetimeSource { Header, PivotUri, DefaultNow };

/// A negotiation target: where the datetime came from matters for error
/// reporting (bad header value vs. bad pivot URI).
struct TargetDatetime {
  Instant instant{};
  DatetimeSource source = DatetimeSource::Header;

  friend bool operator==(const TargetDatetime&, const TargetDatetime&) = default;
};

enum class DatetimeError {
  BadFormat,       // does not match the accepted grammar
  ImpossibleDate,  // well-formed but not a real calendar datetime (or pre-1970)
};

template <typename T>
using DatetimeResult = std::variant<T, DatetimeError>;

/// Parses the RFC 1123 HTTP-date form `Day, DD Mon YYYY HH:MM:SS GMT`.
/// The weekday token must be one of the seven names but is not checked
/// against the date; the zone must be literally "GMT". Legacy RFC 850 and
/// asctime forms are rejected.
DatetimeResult<TargetDatetime> parse_http_datetime(std::string_view text);

/// Parses a 14-digit `YYYYMMDDHHMMSS` UTC pivot as used in paged TimeMap
/// URIs and revision dumps.
DatetimeResult<TargetDatetime> parse_pivot(std::string_view text);

/// Renders an instant in the RFC 1123 GMT form, e.g.
/// "Sat, 23 Feb 2013 01:55:23 GMT". Inverse of parse_http_datetime.
std::string format_http_datetime(Instant instant);

/// Renders an instant as 14 digits, e.g. "20110630000000".
std::string format_pivot(Instant instant);

/// Current wall-clock time truncated to seconds, tagged DefaultNow.
TargetDatetime now_target();

}  // namespace memento

#endif  // MEMENTO_DATETIME_HPP
