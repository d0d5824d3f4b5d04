#include "tcm/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace tcm {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", value == 0.0 ? 0.0 : value);  // no "-0"
    return buf;
}

void write_trace_csv(std::ostream& out, const ConcurrenceTrace& trace, const std::vector<DeathInterval>& intervals) {
    const bool psi = trace.family == Family::Psi;
    out << (psi ? "T,C,signed_C,x1_abs,x2_abs,x3_abs\n" : "T,C,x1_abs,x2_abs,x3_abs,x5_abs,in_death_window\n");
    for (std::size_t i = 0; i < trace.T.size(); ++i) {
        const auto& a = trace.amplitude_abs[i];
        out << format_number(trace.T[i]) << ',' << format_number(trace.C[i]);
        if (psi) {
            out << ',' << format_number(trace.signed_C[i]) << ',' << format_number(a[0]) << ','
                << format_number(a[1]) << ',' << format_number(a[2]) << '\n';
        } else {
            const double T = trace.T[i];
            const bool dead = std::any_of(intervals.begin(), intervals.end(),
                                          [T](const DeathInterval& d) { return T >= d.T_start && T <= d.T_end; });
            out << ',' << format_number(a[0]) << ',' << format_number(a[1]) << ',' << format_number(a[2]) << ','
                << format_number(a[4]) << ',' << (dead ? 1 : 0) << '\n';
        }
    }
}

void write_intervals_csv(std::ostream& out, const std::vector<IntervalRecord>& records) {
    out << "path,alpha,epsilon,T_start,T_end,length,refined\n";
    for (const auto& r : records)
        out << to_string(r.path) << ',' << format_number(r.alpha) << ',' << format_number(r.epsilon) << ','
            << format_number(r.interval.T_start) << ',' << format_number(r.interval.T_end) << ','
            << format_number(r.interval.length()) << ',' << (r.interval.refined ? 1 : 0) << '\n';
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (first) {
            table.header = std::move(fields);
            first = false;
        } else {
            table.rows.push_back(std::move(fields));
        }
    }
    return table;
}

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

void write_svg_chart(std::ostream& out, const std::string& title, const std::string& x_label,
                     const std::string& y_label, const std::vector<SvgSeries>& series) {
    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    bool any = false;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!any) {
                x_min = x_max = s.x[i];
                y_min = y_max = s.y[i];
                any = true;
            }
            x_min = std::min(x_min, s.x[i]);
            x_max = std::max(x_max, s.x[i]);
            y_min = std::min(y_min, s.y[i]);
            y_max = std::max(y_max, s.y[i]);
        }
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max == y_min) y_max = y_min + 1;

    const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return kTop + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n";
    out << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    out << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
        << xml_escape(title) << "</text>\n";
    out << "<rect x=\"" << coord(kLeft) << "\" y=\"" << coord(kTop) << "\" width=\"" << coord(plot_w)
        << "\" height=\"" << coord(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int k = 0; k <= 5; ++k) {
        const double xv = x_min + (x_max - x_min) * k / 5.0;
        const double yv = y_min + (y_max - y_min) * k / 5.0;
        out << "<line x1=\"" << coord(px(xv)) << "\" y1=\"" << coord(kTop + plot_h) << "\" x2=\"" << coord(px(xv))
            << "\" y2=\"" << coord(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << coord(px(xv)) << "\" y=\"" << coord(kTop + plot_h + 20)
            << "\" text-anchor=\"middle\" font-size=\"12\">" << format_number(std::round(xv * 1000) / 1000)
            << "</text>\n";
        out << "<line x1=\"" << coord(kLeft - 5) << "\" y1=\"" << coord(py(yv)) << "\" x2=\"" << coord(kLeft)
            << "\" y2=\"" << coord(py(yv)) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << coord(kLeft - 8) << "\" y=\"" << coord(py(yv) + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">" << format_number(std::round(yv * 1000) / 1000)
            << "</text>\n";
    }
    out << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"" << coord(kHeight - 15)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(x_label) << "</text>\n";
    out << "<text x=\"18\" y=\"" << coord(kTop + plot_h / 2) << "\" text-anchor=\"middle\" font-size=\"14\" "
        << "transform=\"rotate(-90 18 " << coord(kTop + plot_h / 2) << ")\">" << xml_escape(y_label) << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % std::size(kPalette)];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].x.size(); ++i)
            out << (i ? " " : "") << coord(px(series[s].x[i])) << ',' << coord(py(series[s].y[i]));
        out << "\"/>\n";
        const double ly = kTop + 10 + 20.0 * static_cast<double>(s);
        const double lx = kWidth - kRight + 15;
        out << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(ly) << "\" x2=\"" << coord(lx + 25) << "\" y2=\""
            << coord(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << coord(lx + 32) << "\" y=\"" << coord(ly + 4) << "\" font-size=\"12\">"
            << xml_escape(series[s].label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace tcm
