#include "dosim/channel.hpp"

#include <cmath>

namespace dosim {

ChannelRealization sample_channel(const SystemConfig& config, const TrialStream& stream) {
    config.validate();
    PhiloxStream rng(stream.seed, stream.trial_index);
    ChannelRealization h;
    h.blocks.reserve(static_cast<std::size_t>(config.blocks));
    const double scale = 1.0 / std::sqrt(2.0);  // CN(0,1): each part has variance 1/2
    for (int i = 0; i < config.blocks; ++i) {
        Eigen::MatrixXcd block(config.n_r, config.n_t);
        for (int r = 0; r < config.n_r; ++r) {
            for (int c = 0; c < config.n_t; ++c) {
                const auto z = rng.next_normal_pair();
                block(r, c) = std::complex<double>(z[0] * scale, z[1] * scale);
            }
        }
        h.blocks.push_back(std::move(block));
    }
    return h;
}

}  // namespace dosim
