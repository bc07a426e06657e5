#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace baseline {

// Naive local calendar time. No time zones, no DST arithmetic: a timestamp
// is a plain count of minutes on a continuous local clock.
using Date = std::chrono::sys_days;
using Minute = std::chrono::sys_time<std::chrono::minutes>;

inline Date date_of(Minute t) { return std::chrono::floor<std::chrono::days>(t); }

inline int hour_of(Minute t) {
  auto since_midnight = t - date_of(t);
  return static_cast<int>(std::chrono::duration_cast<std::chrono::hours>(since_midnight).count());
}

inline Minute hour_start_of(Minute t) { return std::chrono::floor<std::chrono::hours>(t); }

// ISO weekday, Monday = 1 .. Sunday = 7.
inline int iso_weekday(Date d) {
  return static_cast<int>(std::chrono::weekday{d}.iso_encoding());
}

inline int day_of_month(Date d) {
  std::chrono::year_month_day ymd{d};
  return static_cast<int>(static_cast<unsigned>(ymd.day()));
}

inline int month_of(Date d) {
  std::chrono::year_month_day ymd{d};
  return static_cast<int>(static_cast<unsigned>(ymd.month()));
}

// Day-of-year starting at 1.
inline int day_of_year(Date d) {
  std::chrono::year_month_day ymd{d};
  Date jan1{std::chrono::year_month_day{ymd.year(), std::chrono::January, std::chrono::day{1}}};
  return static_cast<int>((d - jan1).count()) + 1;
}

inline Date make_date(int y, unsigned m, unsigned day) {
  return Date{std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{m},
                                          std::chrono::day{day}}};
}

std::string format_date(Date d);
std::string format_minute(Minute t);

// Parse `YYYY-MM-DD`; returns nullopt on malformed or non-existent dates.
std::optional<Date> parse_date(std::string_view s);

// Parse `YYYY-MM-DDTHH:MM` (an optional `:SS` suffix is accepted and truncated).
std::optional<Minute> parse_minute(std::string_view s);

inline std::string format_date(Date d) {
  std::chrono::year_month_day ymd{d};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

inline std::string format_minute(Minute t) {
  Date d = date_of(t);
  auto rest = std::chrono::duration_cast<std::chrono::minutes>(t - d).count();
  char buf[24];
  std::chrono::year_month_day ymd{d};
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(rest / 60), static_cast<int>(rest % 60));
  return buf;
}

namespace detail {
inline bool parse_fixed_uint(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    if (i >= s.size() || s[i] < '0' || s[i] > '9') return false;
    v = v * 10 + (s[i] - '0');
  }
  out = v;
  return true;
}
}  // namespace detail

inline std::optional<Date> parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  int y, m, d;
  if (!detail::parse_fixed_uint(s, 0, 4, y) || !detail::parse_fixed_uint(s, 5, 2, m) ||
      !detail::parse_fixed_uint(s, 8, 2, d))
    return std::nullopt;
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                  std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) return std::nullopt;
  return Date{ymd};
}

inline std::optional<Minute> parse_minute(std::string_view s) {
  if (s.size() != 16 && s.size() != 19) return std::nullopt;
  if (s[10] != 'T') return std::nullopt;
  auto d = parse_date(s.substr(0, 10));
  if (!d) return std::nullopt;
  int hh, mm;
  if (s[13] != ':' || !detail::parse_fixed_uint(s, 11, 2, hh) ||
      !detail::parse_fixed_uint(s, 14, 2, mm))
    return std::nullopt;
  if (hh > 23 || mm > 59) return std::nullopt;
  if (s.size() == 19) {
    int ss;
    if (s[16] != ':' || !detail::parse_fixed_uint(s, 17, 2, ss) || ss > 59) return std::nullopt;
  }
  return Minute{*d} + std::chrono::hours{hh} + std::chrono::minutes{mm};
}

}  // namespace baseline
