#include "cli/sample_series.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string_view>

#include "cli/problem_file.hpp"

namespace fraccauchy::cli {

std::string format_number(double v) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_csv(std::ostream& out, const SampleSeries& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.x) << ',' << format_number(r.y_series) << ','
        << format_number(r.y_exp) << ',' << format_number(r.abs_diff) << '\n';
  }
}

namespace {

double parse_field(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("csv line " + std::to_string(line_no) + ": bad number '" +
                     std::string(field) + "'");
  }
  return v;
}

}  // namespace

SampleSeries read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError("csv: expected header '" + std::string(kCsvHeader) + "'");
  }
  SampleSeries rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double fields[4];
    std::string_view rest = line;
    for (int i = 0; i < 4; ++i) {
      const auto comma = rest.find(',');
      if ((i < 3) != (comma != std::string_view::npos)) {
        throw ParseError("csv line " + std::to_string(line_no) + ": expected 4 fields");
      }
      fields[i] = parse_field(rest.substr(0, comma), line_no);
      if (i < 3) rest.remove_prefix(comma + 1);
    }
    rows.push_back({fields[0], fields[1], fields[2], fields[3]});
  }
  return rows;
}

void write_plot_script(std::ostream& out, const std::string& csv_path, const std::string& title) {
  out << "# gnuplot script; run with: gnuplot -p <this file>\n"
      << "set datafile separator ','\n"
      << "set title '" << title << "'\n"
      << "set xlabel 'x'\n"
      << "set ylabel 'y(x)'\n"
      << "set grid\n"
      << "set key top right\n"
      << "plot '" << csv_path << "' skip 1 using 1:2 with lines lw 2 title 'series', \\\n"
      << "     '" << csv_path << "' skip 1 using 1:3 with points pt 7 ps 0.7 title 'exponential form'\n";
}

}  // namespace fraccauchy::cli
