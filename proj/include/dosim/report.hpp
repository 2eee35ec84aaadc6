#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dosim/sweep.hpp"

namespace dosim {

// One parsed line of a result table; separation columns may be empty.
struct ResultRow {
    double snr_db = 0.0;
    double informed_p = 0.0;
    double informed_ci_low = 0.0;
    double informed_ci_high = 0.0;
    std::optional<double> separation_p;
    std::optional<double> separation_ci_low;
    std::optional<double> separation_ci_high;
    std::uint64_t trials = 0;
};

struct ResultTable {
    std::vector<std::string> metadata;  // leading "# " comment lines, verbatim
    std::vector<ResultRow> rows;
};

// Writes the sweep as CSV: a metadata comment block (resolved scenario,
// never timing) followed by the fixed header and one row per grid
// point. Doubles carry 17 significant digits so a re-parse is exact.
void write_result_csv(const SweepResult& result, const std::string& scenario_echo,
                      std::ostream& out);

ResultTable parse_result_csv(std::istream& in);
ResultTable load_result_csv(const std::string& path);

// Renders outage-vs-SNR polylines from one or more result tables as a
// self-contained SVG with a log10 y axis. All tables must share the same
// snr_db grid and each must have at least two rows. Zero-probability
// points are skipped (no log image). Output is byte-deterministic.
std::string render_figure(const std::vector<std::pair<std::string, ResultTable>>& tables);

}  // namespace dosim
