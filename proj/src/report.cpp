#include "dosim/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dosim {

namespace {

constexpr const char* kHeader =
    "snr_db,informed_p,informed_ci_low,informed_ci_high,"
    "separation_p,separation_ci_low,separation_ci_high,trials";

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

void write_result_csv(const SweepResult& result, const std::string& scenario_echo,
                      std::ostream& out) {
    out << "# scenario: " << scenario_echo << "\n";
    if (result.slope_informed) {
        out << "# slope_informed: " << fmt_double(result.slope_informed->estimate.slope)
            << " window_db=[" << fmt_double(result.slope_informed->window_lo_db) << ","
            << fmt_double(result.slope_informed->window_hi_db) << "]\n";
    }
    if (result.slope_separation) {
        out << "# slope_separation: " << fmt_double(result.slope_separation->estimate.slope)
            << " window_db=[" << fmt_double(result.slope_separation->window_lo_db) << ","
            << fmt_double(result.slope_separation->window_hi_db) << "]\n";
    }
    out << kHeader << "\n";
    for (const auto& row : result.rows) {
        out << fmt_double(row.snr_db) << ',' << fmt_double(row.informed.p_hat) << ','
            << fmt_double(row.informed.ci_low) << ',' << fmt_double(row.informed.ci_high) << ',';
        if (row.separation) {
            out << fmt_double(row.separation->p_hat) << ',' << fmt_double(row.separation->ci_low)
                << ',' << fmt_double(row.separation->ci_high);
        } else {
            out << ",,";
        }
        out << ',' << row.informed.trials << "\n";
    }
}

ResultTable parse_result_csv(std::istream& in) {
    ResultTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            table.metadata.push_back(line);
            continue;
        }
        if (!header_seen) {
            if (line != kHeader)
                throw std::runtime_error("result csv: unexpected header: " + line);
            header_seen = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 8)
            throw std::runtime_error("result csv: expected 8 fields, got line: " + line);
        ResultRow row;
        row.snr_db = std::stod(fields[0]);
        row.informed_p = std::stod(fields[1]);
        row.informed_ci_low = std::stod(fields[2]);
        row.informed_ci_high = std::stod(fields[3]);
        if (!fields[4].empty()) {
            row.separation_p = std::stod(fields[4]);
            row.separation_ci_low = std::stod(fields[5]);
            row.separation_ci_high = std::stod(fields[6]);
        }
        row.trials = std::stoull(fields[7]);
        table.rows.push_back(row);
    }
    if (!header_seen) throw std::runtime_error("result csv: no header line found");
    return table;
}

ResultTable load_result_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("result csv: cannot open '" + path + "'");
    return parse_result_csv(in);
}

std::string render_figure(const std::vector<std::pair<std::string, ResultTable>>& tables) {
    if (tables.empty()) throw std::invalid_argument("render_figure: no input tables");
    const auto& reference = tables.front().second;
    if (reference.rows.size() < 2)
        throw std::invalid_argument("render_figure: need at least 2 rows to draw a line");
    for (const auto& [name, table] : tables) {
        if (table.rows.size() != reference.rows.size())
            throw std::invalid_argument("render_figure: snr grid mismatch across inputs");
        for (std::size_t i = 0; i < table.rows.size(); ++i)
            if (table.rows[i].snr_db != reference.rows[i].snr_db)
                throw std::invalid_argument("render_figure: snr grid mismatch across inputs");
    }

    struct Series {
        std::string label;
        std::vector<std::pair<double, double>> pts;  // (snr_db, p), p > 0
    };
    std::vector<Series> series;
    for (const auto& [name, table] : tables) {
        Series informed{name + " informed", {}};
        Series separation{name + " separation", {}};
        bool has_separation = false;
        for (const auto& row : table.rows) {
            if (row.informed_p > 0.0) informed.pts.emplace_back(row.snr_db, row.informed_p);
            if (row.separation_p) {
                has_separation = true;
                if (*row.separation_p > 0.0)
                    separation.pts.emplace_back(row.snr_db, *row.separation_p);
            }
        }
        series.push_back(std::move(informed));
        if (has_separation) series.push_back(std::move(separation));
    }

    double min_p = 1.0;
    double x_min = reference.rows.front().snr_db;
    double x_max = reference.rows.back().snr_db;
    bool any_point = false;
    for (const auto& s : series)
        for (const auto& [x, p] : s.pts) {
            min_p = std::min(min_p, p);
            any_point = true;
        }
    if (!any_point) throw std::invalid_argument("render_figure: all probabilities are zero");
    if (x_max <= x_min) x_max = x_min + 1.0;

    const double y_lo = std::floor(std::log10(min_p));  // decade floor
    const double y_hi = 0.0;

    const double width = 880.0, height = 560.0;
    const double left = 70.0, right = width - 220.0, top = 30.0, bottom = height - 60.0;
    const auto x_of = [&](double snr_db) {
        return left + (snr_db - x_min) / (x_max - x_min) * (right - left);
    };
    const auto y_of = [&](double p) {
        const double ly = std::log10(p);
        return bottom - (ly - y_lo) / (y_hi - y_lo) * (bottom - top);
    };

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                     "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
    constexpr int kPaletteSize = 8;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    for (const auto& [name, table] : tables) {
        for (const auto& line : table.metadata) {
            std::string safe = line;
            for (std::size_t pos; (pos = safe.find("--")) != std::string::npos;)
                safe.replace(pos, 2, "- -");
            svg << "<!-- " << name << " " << safe << " -->\n";
        }
    }
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << fmt_coord(left) << "\" y=\"" << fmt_coord(top) << "\" width=\""
        << fmt_coord(right - left) << "\" height=\"" << fmt_coord(bottom - top)
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    // y axis: one tick per decade
    for (int d = static_cast<int>(y_lo); d <= 0; ++d) {
        const double y = y_of(std::pow(10.0, d));
        svg << "<line x1=\"" << fmt_coord(left - 5) << "\" y1=\"" << fmt_coord(y) << "\" x2=\""
            << fmt_coord(right) << "\" y2=\"" << fmt_coord(y)
            << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
        svg << "<text x=\"" << fmt_coord(left - 8) << "\" y=\"" << fmt_coord(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" << d
            << "</text>\n";
    }
    // x axis ticks at grid points, thinned to at most 13 labels
    const std::size_t n_rows = reference.rows.size();
    const std::size_t stride = n_rows <= 13 ? 1 : (n_rows + 12) / 13;
    for (std::size_t i = 0; i < n_rows; i += stride) {
        const double snr_db = reference.rows[i].snr_db;
        const double x = x_of(snr_db);
        svg << "<line x1=\"" << fmt_coord(x) << "\" y1=\"" << fmt_coord(bottom) << "\" x2=\""
            << fmt_coord(x) << "\" y2=\"" << fmt_coord(bottom + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt_coord(x) << "\" y=\"" << fmt_coord(bottom + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << fmt_coord(snr_db) << "</text>\n";
    }
    svg << "<text x=\"" << fmt_coord((left + right) / 2) << "\" y=\"" << fmt_coord(height - 15)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">SNR (dB)"
        << "</text>\n";
    svg << "<text x=\"18\" y=\"" << fmt_coord((top + bottom) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        << "transform=\"rotate(-90 18 " << fmt_coord((top + bottom) / 2)
        << ")\">outage probability</text>\n";

    int color_idx = 0;
    double legend_y = top + 14;
    for (const auto& s : series) {
        const char* color = kPalette[color_idx % kPaletteSize];
        ++color_idx;
        if (s.pts.size() >= 2) {
            svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" "
                << "points=\"";
            for (const auto& [snr_db, p] : s.pts)
                svg << fmt_coord(x_of(snr_db)) << ',' << fmt_coord(y_of(p)) << ' ';
            svg << "\"/>\n";
        }
        for (const auto& [snr_db, p] : s.pts) {
            svg << "<circle cx=\"" << fmt_coord(x_of(snr_db)) << "\" cy=\""
                << fmt_coord(y_of(p)) << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
        }
        svg << "<line x1=\"" << fmt_coord(right + 10) << "\" y1=\"" << fmt_coord(legend_y - 4)
            << "\" x2=\"" << fmt_coord(right + 34) << "\" y2=\"" << fmt_coord(legend_y - 4)
            << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
        svg << "<text x=\"" << fmt_coord(right + 40) << "\" y=\"" << fmt_coord(legend_y)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
        legend_y += 18;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace dosim
