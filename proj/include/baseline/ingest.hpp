#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <vector>

#include "baseline/time.hpp"

namespace baseline {

// One meter/temperature sample at an (often irregular) 15-minute cadence.
struct RawReading {
  Minute timestamp;
  double energy_kwh;  // kWh consumed since the previous reading, >= 0
  double temp_c;      // outside sensor, degrees Celsius
};

struct ParseResult {
  std::vector<RawReading> readings;   // strictly increasing timestamps
  std::size_t duplicates_dropped = 0; // duplicate timestamps collapsed (last kept)
  std::size_t temp_flags = 0;         // readings outside the [-40, 60] C plausibility band
};

// Hour bucket. temp_c is NaN when the hour has no readings and sits in a
// temperature gap longer than 3 hours (no interpolation across such gaps).
struct HourlyRecord {
  Minute hour_start;
  double energy_kwh;
  double temp_c;
  double coverage;  // fraction of the nominal 4 readings/hour present, in [0,1]
  bool has_temp() const;
};

struct DailyRecord {
  Date date;
  double energy_kwh;
  double temp_max;
  double temp_mean;
  double temp_min;
  bool complete;
};

// Parse the raw CSV contract: header `timestamp,energy_kwh,temp_c`,
// timestamps `YYYY-MM-DDTHH:MM`. Duplicate timestamps keep the last
// occurrence; anything else out of order is an error.
ParseResult parse_readings(std::istream& source);

// Bucket readings into hours between the first and last timestamp. Energy is
// summed, temperature averaged, coverage = count/4 capped at 1. Empty hours
// get zero energy and a temperature interpolated linearly across gaps of at
// most 3 hours.
std::vector<HourlyRecord> resample_hourly(const std::vector<RawReading>& readings);

// Aggregate hours into calendar days. A day is complete when mean hourly
// coverage reaches min_coverage and every 6-hour quadrant has at least one
// covered hour. Temperature stats run over hours that carry a temperature.
std::vector<DailyRecord> resample_daily(const std::vector<HourlyRecord>& hours,
                                        double min_coverage = 0.8);

void write_raw_csv(std::ostream& out, const std::vector<RawReading>& readings);
void write_daily_csv(std::ostream& out, const std::vector<DailyRecord>& days);
std::vector<DailyRecord> read_daily_csv(std::istream& in);

}  // namespace baseline
