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

#include "memento/datetime.hpp"

#include <array>
#include <cstdio>

namespace memento {
namespace {

constexpr std::array<std::string_view, 7> kDayNames = {
    "Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"};

constexpr std::array<std::string_view, 12> kMonthNames = {
    "Jan", "Feb", "Mar", "Apr", "May", "Jun",
    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return !s.empty();
}

int to_int(std::string_view s) {
  int value = 0;
  for (char c : s) value = value * 10 + (c - '0');
  return value;
}

// Builds the instant from validated-range fields, rejecting impossible
// calendar dates (Feb 30) and anything before 1970.
DatetimeResult<TargetDatetime> from_fields(int year, int month, int day,
                                           int hour, int minute, int second,
                                           DatetimeSource source) {
  using namespace std::chrono;
  if (month < 1 || month > 12 || hour > 23 || minute > 59 || second > 59) {
    return DatetimeError::ImpossibleDate;
  }
  year_month_day ymd{std::chrono::year{year}, std::chrono::month{unsigned(month)},
                     std::chrono::day{unsigned(day)}};
  if (!ymd.ok()) return DatetimeError::ImpossibleDate;
  if (year < 1970) return DatetimeError::ImpossibleDate;
  Instant instant = sys_days{ymd} + hours{hour} + minutes{minute} + seconds{second};
  return TargetDatetime{instant, source};
}

int month_index(std::string_view name) {
  for (std::size_t i = 0; i < kMonthNames.size(); ++i) {
    if (kMonthNames[i] == name) return int(i) + 1;
  }
  return 0;
}

bool is_day_name(std::string_view name) {
  for (auto d : kDayNames) {
    if (d == name) return true;
  }
  return false;
}

}  // namespace

DatetimeResult<TargetDatetime> parse_http_datetime(std::string_view text) {
  // Day, DD Mon YYYY HH:MM:SS GMT
  // 01234567890123456789012345678
  if (text.size() != 29) return DatetimeError::BadFormat;
  if (!is_day_name(text.substr(0, 3))) return DatetimeError::BadFormat;
  if (text.substr(3, 2) != ", ") return DatetimeError::BadFormat;
  std::string_view day = text.substr(5, 2);
  if (text[7] != ' ') return DatetimeError::BadFormat;
  int month = month_index(text.substr(8, 3));
  if (month == 0) return DatetimeError::BadFormat;
  if (text[11] != ' ') return DatetimeError::BadFormat;
  std::string_view year = text.substr(12, 4);
  if (text[16] != ' ') return DatetimeError::BadFormat;
  std::string_view hh = text.substr(17, 2);
  std::string_view mm = text.substr(20, 2);
  std::string_view ss = text.substr(23, 2);
  if (text[19] != ':' || text[22] != ':') return DatetimeError::BadFormat;
  if (text.substr(25) != " GMT") return DatetimeError::BadFormat;
  if (!all_digits(day) || !all_digits(year) || !all_digits(hh) ||
      !all_digits(mm) || !all_digits(ss)) {
    return DatetimeError::BadFormat;
  }
  return from_fields(to_int(year), month, to_int(day), to_int(hh), to_int(mm),
                     to_int(ss), DatetimeSource::Header);
}

DatetimeResult<TargetDatetime> parse_pivot(std::string_view text) {
  if (text.size() != 14 || !all_digits(text)) return DatetimeError::BadFormat;
  return from_fields(to_int(text.substr(0, 4)), to_int(text.substr(4, 2)),
                     to_int(text.substr(6, 2)), to_int(text.substr(8, 2)),
                     to_int(text.substr(10, 2)), to_int(text.substr(12, 2)),
                     DatetimeSource::PivotUri);
}

std::string format_http_datetime(Instant instant) {
  using namespace std::chrono;
  sys_days days_part = floor<std::chrono::days>(instant);
  year_month_day ymd{days_part};
  weekday wd{days_part};
  auto tod = instant - days_part;
  int hh = int(duration_cast<hours>(tod).count());
  int mm = int(duration_cast<minutes>(tod).count() % 60);
  int ss = int(duration_cast<seconds>(tod).count() % 60);
  std::string_view day_name = kDayNames[wd.c_encoding()];
  std::string_view month_name = kMonthNames[unsigned(ymd.month()) - 1];
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3s, %02u %.3s %04d %02d:%02d:%02d GMT",
                day_name.data(), unsigned(ymd.day()), month_name.data(),
                int(ymd.year()), hh, mm, ss);
  return buf;
}

std::string format_pivot(Instant instant) {
  using namespace std::chrono;
  sys_days days_part = floor<std::chrono::days>(instant);
  year_month_day ymd{days_part};
  auto tod = instant - days_part;
  int hh = int(duration_cast<hours>(tod).count());
  int mm = int(duration_cast<minutes>(tod).count() % 60);
  int ss = int(duration_cast<seconds>(tod).count() % 60);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d%02u%02u%02d%02d%02d", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()), hh, mm, ss);
  return buf;
}

TargetDatetime now_target() {
  using namespace std::chrono;
  return TargetDatetime{time_point_cast<seconds>(system_clock::now()),
                        DatetimeSource::DefaultNow};
}

}  // namespace memento
