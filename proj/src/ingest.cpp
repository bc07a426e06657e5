#include "baseline/ingest.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "baseline/csv.hpp"

namespace baseline {

namespace {
constexpr double kTempPlausibleMin = -40.0;
constexpr double kTempPlausibleMax = 60.0;
constexpr int kReadingsPerHour = 4;       // nominal 15-minute cadence
constexpr int kMaxInterpolateGapHours = 3;
const double kNan = std::numeric_limits<double>::quiet_NaN();

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}
}  // namespace

bool HourlyRecord::has_temp() const { return !std::isnan(temp_c); }

ParseResult parse_readings(std::istream& source) {
  ParseResult result;
  std::string line;
  if (!std::getline(source, line)) throw std::runtime_error("empty input: missing header row");
  auto header = split_csv_line(trim(line));
  if (header.size() != 3 || trim(header[0]) != "timestamp" || trim(header[1]) != "energy_kwh" ||
      trim(header[2]) != "temp_c") {
    throw std::runtime_error("expected header 'timestamp,energy_kwh,temp_c', got '" +
                             std::string(trim(line)) + "'");
  }

  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    auto fields = split_csv_line(body);
    if (fields.size() != 3) parse_fail(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    auto ts = parse_minute(trim(fields[0]));
    if (!ts) parse_fail(line_no, "malformed timestamp '" + std::string(trim(fields[0])) + "'");
    auto energy = parse_double(trim(fields[1]));
    if (!energy) parse_fail(line_no, "malformed energy_kwh '" + std::string(trim(fields[1])) + "'");
    auto temp = parse_double(trim(fields[2]));
    if (!temp) parse_fail(line_no, "malformed temp_c '" + std::string(trim(fields[2])) + "'");
    if (*energy < 0)
      throw std::runtime_error("negative consumption at line " + std::to_string(line_no));
    if (*temp < kTempPlausibleMin || *temp > kTempPlausibleMax) ++result.temp_flags;

    RawReading reading{*ts, *energy, *temp};
    if (!result.readings.empty()) {
      Minute prev = result.readings.back().timestamp;
      if (*ts == prev) {
        result.readings.back() = reading;  // keep the last occurrence
        ++result.duplicates_dropped;
        continue;
      }
      if (*ts < prev) {
        parse_fail(line_no, "timestamps not increasing: " + format_minute(*ts) + " after " +
                                format_minute(prev));
      }
    }
    result.readings.push_back(reading);
  }
  return result;
}

std::vector<HourlyRecord> resample_hourly(const std::vector<RawReading>& readings) {
  std::vector<HourlyRecord> hours;
  if (readings.empty()) return hours;

  Minute first_hour = hour_start_of(readings.front().timestamp);
  Minute last_hour = hour_start_of(readings.back().timestamp);
  std::size_t idx = 0;
  for (Minute h = first_hour; h <= last_hour; h += std::chrono::hours{1}) {
    double energy = 0.0, temp_sum = 0.0;
    int count = 0;
    while (idx < readings.size() && readings[idx].timestamp < h + std::chrono::hours{1}) {
      energy += readings[idx].energy_kwh;
      temp_sum += readings[idx].temp_c;
      ++count;
      ++idx;
    }
    HourlyRecord rec;
    rec.hour_start = h;
    rec.energy_kwh = energy;
    rec.coverage = std::min(1.0, static_cast<double>(count) / kReadingsPerHour);
    rec.temp_c = count > 0 ? temp_sum / count : kNan;
    hours.push_back(rec);
  }

  // Fill temperature across short gaps. Runs of empty hours up to 3 hours
  // long get a linear ramp between the flanking measured temperatures;
  // longer runs stay without a temperature.
  std::size_t i = 0;
  while (i < hours.size()) {
    if (hours[i].has_temp()) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < hours.size() && !hours[j].has_temp()) ++j;
    std::size_t run = j - i;
    if (i > 0 && j < hours.size() && run <= kMaxInterpolateGapHours) {
      double t0 = hours[i - 1].temp_c;
      double t1 = hours[j].temp_c;
      for (std::size_t k = 0; k < run; ++k) {
        hours[i + k].temp_c = t0 + (t1 - t0) * static_cast<double>(k + 1) / (run + 1);
      }
    }
    i = j;
  }
  return hours;
}

std::vector<DailyRecord> resample_daily(const std::vector<HourlyRecord>& hours,
                                        double min_coverage) {
  std::vector<DailyRecord> days;
  if (hours.empty()) return days;

  std::map<Date, std::vector<const HourlyRecord*>> by_date;
  for (const auto& h : hours) by_date[date_of(h.hour_start)].push_back(&h);

  for (const auto& [date, recs] : by_date) {
    DailyRecord day;
    day.date = date;
    day.energy_kwh = 0.0;
    double coverage_sum = 0.0;
    bool quadrant_covered[4] = {false, false, false, false};
    double tmin = kNan, tmax = kNan, tsum = 0.0;
    int temp_hours = 0;
    for (const HourlyRecord* h : recs) {
      day.energy_kwh += h->energy_kwh;
      coverage_sum += h->coverage;
      if (h->coverage > 0) quadrant_covered[hour_of(h->hour_start) / 6] = true;
      if (h->has_temp()) {
        if (temp_hours == 0 || h->temp_c < tmin) tmin = h->temp_c;
        if (temp_hours == 0 || h->temp_c > tmax) tmax = h->temp_c;
        tsum += h->temp_c;
        ++temp_hours;
      }
    }
    day.temp_min = tmin;
    day.temp_max = tmax;
    day.temp_mean = temp_hours > 0 ? tsum / temp_hours : kNan;
    // Hours absent from the stream count as zero coverage.
    double mean_coverage = coverage_sum / 24.0;
    day.complete = mean_coverage >= min_coverage && quadrant_covered[0] && quadrant_covered[1] &&
                   quadrant_covered[2] && quadrant_covered[3] && temp_hours > 0;
    days.push_back(day);
  }
  return days;
}

void write_raw_csv(std::ostream& out, const std::vector<RawReading>& readings) {
  out << "timestamp,energy_kwh,temp_c\n";
  for (const auto& r : readings) {
    out << format_minute(r.timestamp) << ',' << format_double(r.energy_kwh) << ','
        << format_double(r.temp_c) << '\n';
  }
}

void write_daily_csv(std::ostream& out, const std::vector<DailyRecord>& days) {
  out << "date,energy_kwh,temp_max,temp_mean,temp_min,complete\n";
  for (const auto& d : days) {
    out << format_date(d.date) << ',' << format_double(d.energy_kwh) << ','
        << format_double(d.temp_max) << ',' << format_double(d.temp_mean) << ','
        << format_double(d.temp_min) << ',' << (d.complete ? "true" : "false") << '\n';
  }
}

std::vector<DailyRecord> read_daily_csv(std::istream& in) {
  std::vector<DailyRecord> days;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty daily CSV: missing header row");
  if (trim(line) != "date,energy_kwh,temp_max,temp_mean,temp_min,complete") {
    throw std::runtime_error("unexpected daily CSV header '" + std::string(trim(line)) + "'");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    auto fields = split_csv_line(body);
    if (fields.size() != 6) parse_fail(line_no, "expected 6 fields");
    auto date = parse_date(trim(fields[0]));
    if (!date) parse_fail(line_no, "malformed date '" + std::string(trim(fields[0])) + "'");
    DailyRecord d;
    d.date = *date;
    std::optional<double> vals[4];
    for (int i = 0; i < 4; ++i) {
      std::string_view f = trim(fields[i + 1]);
      if (f == "nan") {
        vals[i] = kNan;
      } else {
        vals[i] = parse_double(f);
        if (!vals[i]) parse_fail(line_no, "malformed number '" + std::string(f) + "'");
      }
    }
    d.energy_kwh = *vals[0];
    d.temp_max = *vals[1];
    d.temp_mean = *vals[2];
    d.temp_min = *vals[3];
    std::string_view flag = trim(fields[5]);
    if (flag == "true") {
      d.complete = true;
    } else if (flag == "false") {
      d.complete = false;
    } else {
      parse_fail(line_no, "malformed boolean '" + std::string(flag) + "'");
    }
    if (!days.empty() && d.date <= days.back().date)
      parse_fail(line_no, "dates not strictly increasing");
    days.push_back(d);
  }
  return days;
}

}  // namespace baseline
