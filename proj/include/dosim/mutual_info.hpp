#pragma once

#include <cstdint>

#include "dosim/channel.hpp"
#include "dosim/model.hpp"

namespace dosim {

struct MiEstimatorSettings {
    int noise_samples = 2000;  // MC noise draws per (block, input vector)
    std::uint64_t mi_seed = 0;

    void validate() const {
        if (noise_samples < 1)
            throw std::invalid_argument("MiEstimatorSettings: noise_samples must be >= 1");
    }
};

struct DiscreteMiEstimate {
    double bits = 0.0;       // clamped to [0, m * n_t]
    double std_error = 0.0;  // MC standard error of the pre-clamp mean
};

// Instantaneous mutual information for Gaussian inputs:
// (1/N) sum_i log2 det(I + (snr/n_t) H_i H_i^H), in bits/channel use.
double gaussian_input_mi(const ChannelRealization& h, double snr, const SystemConfig& config);

// Uniform-input coded-modulation mutual information for a discrete
// constellation, estimated by Monte Carlo over the noise. The noise
// stream is keyed by (mi_seed, trial_index) so results do not depend on
// scheduling.
DiscreteMiEstimate discrete_input_mi(const ChannelRealization& h, double snr,
                                     const SystemConfig& config, const ChannelInput& input,
                                     const MiEstimatorSettings& settings,
                                     std::uint64_t trial_index = 0);

}  // namespace dosim
