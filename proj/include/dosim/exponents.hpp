#pragma once

#include <string>
#include <vector>

#include "dosim/model.hpp"

namespace dosim {

struct ExponentResult {
    double value = 0.0;
    std::string regime;  // "full-diversity", "singleton-limited", "zero"
};

// SNR exponent of the transmitter informed bound (distortion outage).
// Gaussian inputs: N n_t n_r. Discrete inputs: Singleton bound at the
// implied rate R_s(D_bar)/b.
ExponentResult informed_exponent(const SystemConfig& config, const ChannelInput& input,
                                 double bandwidth_ratio, double d_bar);

// SNR exponent of the tandem separation scheme at coding rate R_c.
ExponentResult separation_exponent(const SystemConfig& config, const ChannelInput& input,
                                   double coding_rate);

// Diversity-multiplexing tradeoff: piecewise-linear through the anchor
// points (k, N (n_t - k)(n_r - k)) for integer k.
double dmt_curve(const SystemConfig& config, double multiplexing_gain);

// Expected-distortion exponent of the informed bound, Gaussian inputs.
ExponentResult expected_tx_exponent(const SystemConfig& config, double bandwidth_ratio);

// Expected-distortion exponent of the separation scheme. The regime
// formula and an independent variational oracle
// max_r min{2 b r, dmt(r)} are reported side by side; they can differ
// (the regime formula carries a leading N on top of the N already inside
// the tradeoff curve).
struct ExpectedSepExponent {
    double formula_value = 0.0;
    int regime_index = 0;       // j in 1..min(n_t, n_r)
    bool beyond_last_regime = false;
    double oracle_value = 0.0;  // grid search refined by bisection
};
ExpectedSepExponent expected_sep_exponent(const SystemConfig& config, double bandwidth_ratio);

// Smallest bandwidth ratio for which the Singleton exponent of a
// discrete input with m bits/symbol is nonzero: -log2(D_bar)/(2m).
double min_bandwidth_ratio(double d_bar, int m);

struct SlopeEstimate {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
};

// Least-squares slope of -log10(p) versus log10(snr) over the given
// points (snr linear, p in (0, 1]).
SlopeEstimate empirical_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace dosim
