#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fraccauchy::cli {

struct SampleRow {
  double x = 0.0;
  double y_series = 0.0;
  double y_exp = 0.0;
  double abs_diff = 0.0;

  bool operator==(const SampleRow&) const = default;
};

using SampleSeries = std::vector<SampleRow>;

inline constexpr const char* kCsvHeader = "x,y_series,y_exp,abs_diff";

/// 17 significant digits, `.` decimal point, locale independent.
std::string format_number(double v);

void write_csv(std::ostream& out, const SampleSeries& rows);
SampleSeries read_csv(std::istream& in);

/// gnuplot script drawing y_series and y_exp from `csv_path`.
void write_plot_script(std::ostream& out, const std::string& csv_path, const std::string& title);

}  // namespace fraccauchy::cli
