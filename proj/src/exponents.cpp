#include "dosim/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dosim {

namespace {

double full_diversity(const SystemConfig& config) {
    return static_cast<double>(config.blocks) * config.n_t * config.n_r;
}

// Singleton bound n_r (1 + floor(N (n_t - R/m))), clamped to 0 outside
// its positive support. Arguments within 1e-9 of an integer are snapped
// before flooring so printed-precision rates land on the intended step.
ExponentResult singleton_exponent(const SystemConfig& config, double rate, int m) {
    ExponentResult result;
    if (rate > static_cast<double>(m) * config.n_t) {
        result.regime = "zero";
        return result;
    }
    double arg = config.blocks * (config.n_t - rate / static_cast<double>(m));
    const double snapped = std::round(arg);
    if (std::abs(arg - snapped) < 1e-9) arg = snapped;
    const double value = config.n_r * (1.0 + std::floor(arg));
    if (value <= 0.0) {
        result.regime = "zero";
        return result;
    }
    result.value = value;
    result.regime = value >= full_diversity(config) ? "full-diversity" : "singleton-limited";
    return result;
}

}  // namespace

ExponentResult informed_exponent(const SystemConfig& config, const ChannelInput& input,
                                 double bandwidth_ratio, double d_bar) {
    config.validate();
    if (input.kind == InputKind::Gaussian) {
        gaussian_rd_rate(d_bar);  // domain check only
        if (!(bandwidth_ratio > 0.0))
            throw std::invalid_argument("informed_exponent: bandwidth ratio must be > 0");
        return {full_diversity(config), "full-diversity"};
    }
    const double rate = optimal_separation_rate(d_bar, bandwidth_ratio);
    return singleton_exponent(config, rate, input.m);
}

ExponentResult separation_exponent(const SystemConfig& config, const ChannelInput& input,
                                   double coding_rate) {
    config.validate();
    if (!(coding_rate >= 0.0))
        throw std::invalid_argument("separation_exponent: coding rate must be >= 0");
    if (input.kind == InputKind::Gaussian) return {full_diversity(config), "full-diversity"};
    return singleton_exponent(config, coding_rate, input.m);
}

double dmt_curve(const SystemConfig& config, double multiplexing_gain) {
    config.validate();
    const int max_gain = std::min(config.n_t, config.n_r);
    if (!(multiplexing_gain >= 0.0) || multiplexing_gain > max_gain)
        throw std::invalid_argument("dmt_curve: multiplexing gain out of [0, min(n_t, n_r)]");
    const auto anchor = [&](int k) {
        return static_cast<double>(config.blocks) * (config.n_t - k) * (config.n_r - k);
    };
    int k = static_cast<int>(std::floor(multiplexing_gain));
    if (k == max_gain) return anchor(k);
    const double frac = multiplexing_gain - k;
    return (1.0 - frac) * anchor(k) + frac * anchor(k + 1);
}

ExponentResult expected_tx_exponent(const SystemConfig& config, double bandwidth_ratio) {
    config.validate();
    if (!(bandwidth_ratio > 0.0))
        throw std::invalid_argument("expected_tx_exponent: bandwidth ratio must be > 0");
    const double per_block_cap = 2.0 * bandwidth_ratio / config.blocks;
    const double gap = std::abs(config.n_t - config.n_r);
    double sum = 0.0;
    for (int i = 1; i <= std::min(config.n_t, config.n_r); ++i)
        sum += std::min(per_block_cap, 2.0 * i - 1.0 + gap);
    ExponentResult result;
    result.value = config.blocks * sum;
    result.regime =
        result.value >= full_diversity(config) - 1e-12 ? "full-diversity" : "bandwidth-limited";
    return result;
}

ExpectedSepExponent expected_sep_exponent(const SystemConfig& config, double bandwidth_ratio) {
    config.validate();
    if (!(bandwidth_ratio > 0.0))
        throw std::invalid_argument("expected_sep_exponent: bandwidth ratio must be > 0");

    const int max_gain = std::min(config.n_t, config.n_r);
    const auto dstar = [&](int k) {
        return static_cast<double>(config.blocks) * (config.n_r - k) * (config.n_t - k);
    };

    ExpectedSepExponent result;
    const double inv_b = 1.0 / bandwidth_ratio;
    int j = max_gain;
    result.beyond_last_regime = true;
    for (int cand = 1; cand <= max_gain; ++cand) {
        const double lower = cand == 1 ? 0.0 : 2.0 * (cand - 1) / dstar(cand - 1);
        const bool upper_open = dstar(cand) <= 0.0;
        const double upper = upper_open ? 0.0 : 2.0 * cand / dstar(cand);
        if (inv_b >= lower && (upper_open || inv_b < upper)) {
            j = cand;
            result.beyond_last_regime = false;
            break;
        }
    }
    result.regime_index = j;
    const double b2 = 2.0 * bandwidth_ratio;
    result.formula_value = config.blocks * b2 * (j * dstar(j - 1) - (j - 1) * dstar(j)) /
                           (b2 + dstar(j - 1) - dstar(j));

    // Variational oracle: maximize min{2 b r, dmt(r)} over r. The first
    // term increases and the second decreases, so the maximum sits at
    // their crossing; a coarse grid brackets it, bisection refines.
    const auto gap = [&](double r) { return b2 * r - dmt_curve(config, r); };
    const int grid_points = 10000;
    double lo = 0.0, hi = static_cast<double>(max_gain);
    bool bracketed = false;
    for (int i = 1; i <= grid_points; ++i) {
        const double r = max_gain * static_cast<double>(i) / grid_points;
        if (gap(r) >= 0.0) {
            lo = max_gain * static_cast<double>(i - 1) / grid_points;
            hi = r;
            bracketed = true;
            break;
        }
    }
    double r_star = static_cast<double>(max_gain);  // no crossing: 2br stays below dmt
    if (bracketed) {
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            (gap(mid) < 0.0 ? lo : hi) = mid;
        }
        r_star = 0.5 * (lo + hi);
    }
    result.oracle_value = std::min(b2 * r_star, dmt_curve(config, r_star));
    return result;
}

double min_bandwidth_ratio(double d_bar, int m) {
    if (m < 1) throw std::invalid_argument("min_bandwidth_ratio: m must be >= 1");
    return gaussian_rd_rate(d_bar) / static_cast<double>(m);
}

SlopeEstimate empirical_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("empirical_slope: need at least 2 points");
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& [snr, p] : points) {
        if (!(snr > 0.0)) throw std::invalid_argument("empirical_slope: snr must be > 0");
        if (!(p > 0.0) || p > 1.0)
            throw std::invalid_argument("empirical_slope: probabilities must be in (0, 1]");
        xs.push_back(std::log10(snr));
        ys.push_back(-std::log10(p));
    }
    const double n = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    if (sxx <= 0.0)
        throw std::invalid_argument("empirical_slope: degenerate regression, snr values coincide");
    SlopeEstimate est;
    est.slope = sxy / sxx;
    est.intercept = mean_y - est.slope * mean_x;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (est.intercept + est.slope * xs[i]);
        ss += r * r;
    }
    est.rms_residual = std::sqrt(ss / n);
    return est;
}

}  // namespace dosim
