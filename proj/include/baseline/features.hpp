#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "baseline/ingest.hpp"
#include "baseline/linalg.hpp"
#include "baseline/time.hpp"

namespace baseline {

// One day of the design data: calendar features, today's and yesterday's
// temperature summary, and the consumption target.
struct FeatureRow {
  Date date;
  int weekday;        // ISO, Monday = 1
  int week_of_month;  // 1..4, ceil(day/7) clamped
  int workday;        // 1 Monday-Friday, 0 weekend
  double temp_max;
  double temp_mean;
  double temp_min;
  double temp_amplitude;
  double temp_max_y;
  double temp_mean_y;
  double temp_min_y;
  double temp_amplitude_y;
  double target_kwh;
};

struct Dataset {
  std::string store_id;
  std::vector<FeatureRow> rows;  // strictly increasing dates
  std::vector<std::string> feature_names;  // encoded column layout, fixed order

  Date first_date() const { return rows.front().date; }
  Date last_date() const { return rows.back().date; }
  // Calendar span in days, inclusive of both endpoints.
  int span_days() const { return static_cast<int>((last_date() - first_date()).count()) + 1; }
};

// A row exists only for a complete day whose previous calendar day is also
// complete (the lag features must be honest).
Dataset engineer_features(const std::vector<DailyRecord>& days, std::string store_id = "store");

// Fixed encoded layout: weekday one-hot (7), week-of-month one-hot (4),
// workday, then the 8 temperature columns. 20 columns total.
std::vector<std::string> encoded_feature_names();

struct EncodedDesign {
  Matrix X;
  std::vector<double> y;
  ColumnLayout layout;
};

EncodedDesign encode(const Dataset& data);

void write_features_csv(std::ostream& out, const Dataset& data);

}  // namespace baseline
