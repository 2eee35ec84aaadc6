#include "dosim/mutual_info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Cholesky>

#include "dosim/rng.hpp"

namespace dosim {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// log det of a Hermitian positive-definite matrix via Cholesky, in nats.
double hpd_log_det(const Eigen::MatrixXcd& g) {
    Eigen::LLT<Eigen::MatrixXcd> llt(g);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("gaussian_input_mi: Gram matrix not positive definite");
    double log_det = 0.0;
    const auto& l = llt.matrixLLT();
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        log_det += std::log(l(i, i).real());
    return 2.0 * log_det;
}

}  // namespace

double gaussian_input_mi(const ChannelRealization& h, double snr, const SystemConfig& config) {
    config.validate();
    if (!(snr >= 0.0))
        throw std::invalid_argument("gaussian_input_mi: snr must be >= 0");
    if (h.blocks.size() != static_cast<std::size_t>(config.blocks))
        throw std::invalid_argument("gaussian_input_mi: block count mismatch");
    const double scale = snr / static_cast<double>(config.n_t);
    double total_nats = 0.0;
    for (const auto& block : h.blocks) {
        Eigen::MatrixXcd gram = Eigen::MatrixXcd::Identity(config.n_r, config.n_r);
        gram.noalias() += scale * block * block.adjoint();
        total_nats += hpd_log_det(gram);
    }
    return total_nats / (static_cast<double>(config.blocks) * kLn2);
}

DiscreteMiEstimate discrete_input_mi(const ChannelRealization& h, double snr,
                                     const SystemConfig& config, const ChannelInput& input,
                                     const MiEstimatorSettings& settings,
                                     std::uint64_t trial_index) {
    config.validate();
    settings.validate();
    if (!(snr >= 0.0))
        throw std::invalid_argument("discrete_input_mi: snr must be >= 0");
    if (input.kind != InputKind::Discrete)
        throw std::invalid_argument("discrete_input_mi: Gaussian input not supported here");
    input.validate();
    if (h.blocks.size() != static_cast<std::size_t>(config.blocks))
        throw std::invalid_argument("discrete_input_mi: block count mismatch");

    const std::size_t alphabet = input.points.size();
    double joint_count_check = 1.0;
    for (int t = 0; t < config.n_t; ++t) joint_count_check *= static_cast<double>(alphabet);
    if (joint_count_check > 65536.0)
        throw std::invalid_argument("discrete_input_mi: joint alphabet exceeds 2^16 vectors");
    const std::size_t joint_count = static_cast<std::size_t>(joint_count_check);

    // Joint input vectors, enumerated in mixed-radix order over antennas.
    std::vector<Eigen::VectorXcd> inputs(joint_count);
    for (std::size_t k = 0; k < joint_count; ++k) {
        Eigen::VectorXcd x(config.n_t);
        std::size_t idx = k;
        for (int t = 0; t < config.n_t; ++t) {
            x(t) = input.points[idx % alphabet];
            idx /= alphabet;
        }
        inputs[k] = std::move(x);
    }

    const double amp = std::sqrt(snr / static_cast<double>(config.n_t));
    const double max_bits = static_cast<double>(input.m) * config.n_t;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    PhiloxStream noise(settings.mi_seed, trial_index);
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;

    std::vector<Eigen::VectorXcd> tx(joint_count);
    Eigen::VectorXcd z(config.n_r);
    std::vector<double> terms(joint_count);

    for (const auto& block : h.blocks) {
        for (std::size_t k = 0; k < joint_count; ++k)
            tx[k] = amp * (block * inputs[k]);
        for (std::size_t a = 0; a < joint_count; ++a) {
            for (int s = 0; s < settings.noise_samples; ++s) {
                for (int r = 0; r < config.n_r; ++r) {
                    const auto g = noise.next_normal_pair();
                    z(r) = std::complex<double>(g[0] * inv_sqrt2, g[1] * inv_sqrt2);
                }
                const double base = z.squaredNorm();
                double max_term = -std::numeric_limits<double>::infinity();
                for (std::size_t b = 0; b < joint_count; ++b) {
                    terms[b] = base - (tx[a] - tx[b] + z).squaredNorm();
                    max_term = std::max(max_term, terms[b]);
                }
                double acc = 0.0;
                for (std::size_t b = 0; b < joint_count; ++b)
                    acc += std::exp(terms[b] - max_term);
                const double lse_bits = (max_term + std::log(acc)) / kLn2;
                sum += lse_bits;
                sum_sq += lse_bits * lse_bits;
                ++count;
            }
        }
    }

    const double n = static_cast<double>(count);
    const double mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - mean * mean);

    DiscreteMiEstimate est;
    est.std_error = std::sqrt(var / n);
    est.bits = std::clamp(max_bits - mean, 0.0, max_bits);
    return est;
}

}  // namespace dosim
