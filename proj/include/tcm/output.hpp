#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tcm/analysis.hpp"

namespace tcm {

// 15 significant digits, '.' decimal separator.
std::string format_number(double value);

// PSI columns: T,C,signed_C,x1_abs,x2_abs,x3_abs
// PHI columns: T,C,x1_abs,x2_abs,x3_abs,x5_abs,in_death_window
// LF line endings, header row first. `intervals` marks in_death_window for PHI.
void write_trace_csv(std::ostream& out, const ConcurrenceTrace& trace,
                     const std::vector<DeathInterval>& intervals = {});

struct IntervalRecord {
    Path path;
    double alpha;
    double epsilon;
    DeathInterval interval;
};

// Columns: path,alpha,epsilon,T_start,T_end,length,refined
void write_intervals_csv(std::ostream& out, const std::vector<IntervalRecord>& records);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Minimal reader for the files written above (no quoting).
CsvTable read_csv(std::istream& in);

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// 800x500 line chart with linear axes, one polyline per series and a text legend.
void write_svg_chart(std::ostream& out, const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<SvgSeries>& series);

}  // namespace tcm
