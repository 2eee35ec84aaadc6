#pragma once

#include <cstdint>
#include <utility>

#include "dosim/channel.hpp"
#include "dosim/model.hpp"
#include "dosim/mutual_info.hpp"

namespace dosim {

struct OutageEstimate {
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::uint64_t trials = 0;
    std::uint64_t outage_count = 0;
    double confidence = 0.95;
};

// Exact two-sided Clopper-Pearson interval.
std::pair<double, double> binomial_ci(std::uint64_t successes, std::uint64_t trials,
                                      double confidence);

// Instantaneous end-to-end distortion of the transmitter informed
// scheme: 2^(-2 b I_H(snr)), with the MI evaluator picked by input kind.
double informed_distortion(const ChannelRealization& h, double snr, double bandwidth_ratio,
                           const SystemConfig& config, const ChannelInput& input,
                           const MiEstimatorSettings& settings, std::uint64_t trial_index = 0);

// Exact Rayleigh SISO information outage probability,
// Pr{log2(1 + snr |h|^2) < R} = 1 - exp(-(2^R - 1)/snr).
// Validation oracle for the MC pipeline only.
double siso_gaussian_outage_closed_form(double snr, double rate);

// Inner noise stream key for discrete MI, derived from the scenario seed
// so the channel stream and the noise stream never collide.
MiEstimatorSettings mi_settings_for(const Scenario& scenario);

// Outage counts for both estimators evaluated on the same channel
// samples: one I_H evaluation per trial feeds both events. Trials are
// split into contiguous index ranges per worker; counts are summed, so
// the result is identical for any worker count.
struct SharedCounts {
    std::uint64_t informed = 0;
    std::uint64_t separation = 0;
    std::uint64_t trials = 0;
};
SharedCounts shared_outage_counts(const Scenario& scenario, double snr, int workers = 1);

// Separation regimes per the distortion bound D_s(b R_c) + d0 1{I <= R_c}.
enum class SeparationRegime {
    AlwaysOutage,   // D_s(b R_c) > D_bar: source distortion alone misses the target
    NeverOutage,    // D_s(b R_c) + d0 <= D_bar: target met even under channel error
    InformationOutage,  // outage iff I_H(snr) <= R_c
};
SeparationRegime separation_regime(const Scenario& scenario);

OutageEstimate informed_outage_mc(const Scenario& scenario, double snr, int workers = 1);
OutageEstimate separation_outage_mc(const Scenario& scenario, double snr, int workers = 1);

}  // namespace dosim
