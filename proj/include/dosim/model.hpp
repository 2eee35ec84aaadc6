#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dosim {

struct SystemConfig {
    int n_t = 1;  // transmit antennas
    int n_r = 1;  // receive antennas
    int blocks = 1;  // i.i.d. fading blocks per codeword

    void validate() const {
        if (n_t < 1 || n_r < 1 || blocks < 1)
            throw std::invalid_argument("SystemConfig: antenna and block counts must be >= 1");
    }
};

enum class InputKind { Gaussian, Discrete };

// Channel input distribution: Gaussian, or uniform over a finite
// unit-average-energy constellation with m = log2(point count).
struct ChannelInput {
    InputKind kind = InputKind::Gaussian;
    std::vector<std::complex<double>> points;  // empty for Gaussian
    int m = 0;                                 // bits/symbol, Discrete only

    static ChannelInput gaussian() { return {}; }

    static ChannelInput discrete(std::vector<std::complex<double>> pts) {
        ChannelInput in;
        in.kind = InputKind::Discrete;
        in.points = std::move(pts);
        const std::size_t n = in.points.size();
        if (n < 2 || (n & (n - 1)) != 0)
            throw std::invalid_argument("ChannelInput: point count must be a power of two >= 2");
        double energy = 0.0;
        for (const auto& p : in.points) energy += std::norm(p);
        energy /= static_cast<double>(n);
        if (std::abs(energy - 1.0) > 1e-12)
            throw std::invalid_argument("ChannelInput: constellation mean energy must be 1");
        in.m = 0;
        for (std::size_t v = n; v > 1; v >>= 1) ++in.m;
        return in;
    }

    void validate() const {
        if (kind == InputKind::Gaussian) {
            if (!points.empty())
                throw std::invalid_argument("ChannelInput: Gaussian input carries no points");
        } else {
            discrete(points);  // re-check invariants
        }
    }
};

// Unit-variance Gaussian source under quadratic distortion; only the
// bandwidth ratio (channel uses per source symbol) is a free parameter.
struct SourceModel {
    double bandwidth_ratio = 1.0;

    void validate() const {
        if (!(bandwidth_ratio > 0.0))
            throw std::invalid_argument("SourceModel: bandwidth ratio must be > 0");
    }
};

struct DistortionSpec {
    double target = 1.0;  // QoS distortion target, in (0, 1]
    double d0 = 0.5;      // bound on the mean MSE under channel error

    void validate() const {
        if (!(target > 0.0) || target > 1.0)
            throw std::invalid_argument("DistortionSpec: target must be in (0, 1]");
        if (!(d0 > 0.0))
            throw std::invalid_argument("DistortionSpec: d0 must be > 0");
    }
};

struct Scenario {
    SystemConfig config;
    ChannelInput input;
    SourceModel source;
    DistortionSpec distortion;
    double coding_rate = 0.0;  // separation channel code rate, bits/channel use
    std::vector<double> snr_grid_db;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    double confidence = 0.95;
    int mi_noise_samples = 2000;  // inner MC budget for discrete MI

    void validate() const {
        config.validate();
        input.validate();
        source.validate();
        distortion.validate();
        if (coding_rate < 0.0)
            throw std::invalid_argument("Scenario: coding rate must be >= 0");
        for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
            if (!(snr_grid_db[i] > snr_grid_db[i - 1]))
                throw std::invalid_argument("Scenario: snr grid must be strictly increasing");
        if (trials < 1)
            throw std::invalid_argument("Scenario: trials must be >= 1");
        if (!(confidence > 0.0 && confidence < 1.0))
            throw std::invalid_argument("Scenario: confidence must be in (0, 1)");
        if (mi_noise_samples < 1)
            throw std::invalid_argument("Scenario: mi_noise_samples must be >= 1");
    }
};

inline double snr_db_to_linear(double snr_db) {
    return std::pow(10.0, snr_db / 10.0);
}

// D(R) = 2^(-2R) for the unit-variance Gaussian source.
inline double gaussian_rd_distortion(double rate) {
    if (!(rate >= 0.0))
        throw std::invalid_argument("gaussian_rd_distortion: rate must be >= 0");
    return std::exp2(-2.0 * rate);
}

// R(D) = -log2(D)/2, the inverse of the distortion-rate function.
inline double gaussian_rd_rate(double distortion) {
    if (!(distortion > 0.0) || distortion > 1.0)
        throw std::invalid_argument("gaussian_rd_rate: distortion must be in (0, 1]");
    return -0.5 * std::log2(distortion);
}

// The channel coding rate that makes the separation bound coincide with
// the transmitter informed bound: R_c* = R(D_bar) / b.
inline double optimal_separation_rate(double d_bar, double bandwidth_ratio) {
    if (!(bandwidth_ratio > 0.0))
        throw std::invalid_argument("optimal_separation_rate: bandwidth ratio must be > 0");
    return gaussian_rd_rate(d_bar) / bandwidth_ratio;
}

struct RateRange {
    double lo;  // inclusive
    double hi;  // exclusive; +inf when the upper constraint is vacuous
};

// Coding rates for which the separation scheme meets the distortion
// target: D_s(b R_c) <= D_bar < D_s(b R_c) + d0. When D_bar <= d0 the
// upper constraint is vacuous and any rate above the lower limit works.
inline RateRange admissible_rate_range(double d_bar, double d0, double bandwidth_ratio) {
    if (!(d0 > 0.0))
        throw std::invalid_argument("admissible_rate_range: d0 must be > 0");
    RateRange range{};
    range.lo = optimal_separation_rate(d_bar, bandwidth_ratio);
    range.hi = (d_bar - d0 > 0.0)
                   ? gaussian_rd_rate(d_bar - d0) / bandwidth_ratio
                   : std::numeric_limits<double>::infinity();
    return range;
}

}  // namespace dosim
