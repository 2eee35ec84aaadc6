#pragma once

#include <optional>
#include <vector>

#include "dosim/exponents.hpp"
#include "dosim/model.hpp"
#include "dosim/outage.hpp"

namespace dosim {

struct SweepRow {
    double snr_db = 0.0;
    OutageEstimate informed;
    std::optional<OutageEstimate> separation;
    double wall_time_seconds = 0.0;
};

struct SlopeReport {
    SlopeEstimate estimate;
    double window_lo_db = 0.0;
    double window_hi_db = 0.0;
};

struct SweepResult {
    Scenario scenario;
    bool with_separation = true;
    std::vector<SweepRow> rows;
    std::optional<SlopeReport> slope_informed;
    std::optional<SlopeReport> slope_separation;
};

// Runs both outage estimators over the scenario's SNR grid. Each trial's
// mutual information is evaluated once and feeds both outage events, so
// the estimates are comparable sample by sample. Output is identical for
// any worker count.
SweepResult run_sweep(const Scenario& scenario, int workers = 1, bool with_separation = true);

// Fits -log10(p) vs log10(snr) slopes over rows whose snr_db lies in
// [lo_db, hi_db]. Requires at least two usable informed rows; the
// separation slope is attached only when it has two usable rows itself.
void attach_slopes(SweepResult& result, double lo_db, double hi_db);

}  // namespace dosim
