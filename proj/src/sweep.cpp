#include "dosim/sweep.hpp"

#include <chrono>
#include <stdexcept>

namespace dosim {

namespace {

OutageEstimate estimate_from(std::uint64_t outage_count, std::uint64_t trials,
                             double confidence) {
    OutageEstimate est;
    est.outage_count = outage_count;
    est.trials = trials;
    est.confidence = confidence;
    est.p_hat = static_cast<double>(outage_count) / static_cast<double>(trials);
    std::tie(est.ci_low, est.ci_high) = binomial_ci(outage_count, trials, confidence);
    return est;
}

}  // namespace

SweepResult run_sweep(const Scenario& scenario, int workers, bool with_separation) {
    scenario.validate();
    if (scenario.snr_grid_db.empty())
        throw std::invalid_argument("run_sweep: empty snr grid");
    if (workers < 1) throw std::invalid_argument("run_sweep: workers must be >= 1");

    SweepResult result;
    result.scenario = scenario;
    result.with_separation = with_separation;
    const SeparationRegime regime = separation_regime(scenario);

    for (const double snr_db : scenario.snr_grid_db) {
        const auto start = std::chrono::steady_clock::now();
        const SharedCounts counts =
            shared_outage_counts(scenario, snr_db_to_linear(snr_db), workers);
        SweepRow row;
        row.snr_db = snr_db;
        row.informed = estimate_from(counts.informed, counts.trials, scenario.confidence);
        if (with_separation) {
            std::uint64_t sep_count = counts.separation;
            if (regime == SeparationRegime::AlwaysOutage) sep_count = counts.trials;
            if (regime == SeparationRegime::NeverOutage) sep_count = 0;
            row.separation = estimate_from(sep_count, counts.trials, scenario.confidence);
        }
        row.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.rows.push_back(std::move(row));
    }
    return result;
}

void attach_slopes(SweepResult& result, double lo_db, double hi_db) {
    if (!(lo_db < hi_db)) throw std::invalid_argument("attach_slopes: window must be nonempty");
    std::vector<std::pair<double, double>> informed_pts;
    std::vector<std::pair<double, double>> separation_pts;
    for (const auto& row : result.rows) {
        if (row.snr_db < lo_db || row.snr_db > hi_db) continue;
        const double snr = snr_db_to_linear(row.snr_db);
        if (row.informed.p_hat > 0.0) informed_pts.emplace_back(snr, row.informed.p_hat);
        if (row.separation && row.separation->p_hat > 0.0)
            separation_pts.emplace_back(snr, row.separation->p_hat);
    }
    if (informed_pts.size() < 2)
        throw std::invalid_argument(
            "attach_slopes: fewer than 2 rows with nonzero outage in window");
    result.slope_informed = SlopeReport{empirical_slope(informed_pts), lo_db, hi_db};
    result.slope_separation.reset();
    if (separation_pts.size() >= 2)
        result.slope_separation = SlopeReport{empirical_slope(separation_pts), lo_db, hi_db};
}

}  // namespace dosim
