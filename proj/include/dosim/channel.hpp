#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "dosim/model.hpp"
#include "dosim/rng.hpp"

namespace dosim {

// One Monte Carlo trial: N i.i.d. Rayleigh blocks, each an n_r x n_t
// matrix of CN(0,1) entries.
struct ChannelRealization {
    std::vector<Eigen::MatrixXcd> blocks;
};

// Identifies one trial within a reproducible run. The realization is a
// pure function of (seed, trial_index, config), independent of which
// worker draws it.
struct TrialStream {
    std::uint64_t seed = 0;
    std::uint64_t trial_index = 0;
};

ChannelRealization sample_channel(const SystemConfig& config, const TrialStream& stream);

}  // namespace dosim
