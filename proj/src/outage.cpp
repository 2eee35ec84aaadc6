#include "dosim/outage.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

namespace dosim {

std::pair<double, double> binomial_ci(std::uint64_t successes, std::uint64_t trials,
                                      double confidence) {
    if (trials == 0 || successes > trials)
        throw std::invalid_argument("binomial_ci: need 0 <= successes <= trials, trials >= 1");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("binomial_ci: confidence must be in (0, 1)");
    const double alpha = 1.0 - confidence;
    const double s = static_cast<double>(successes);
    const double n = static_cast<double>(trials);
    const double low =
        successes == 0 ? 0.0 : boost::math::ibeta_inv(s, n - s + 1.0, alpha / 2.0);
    const double high =
        successes == trials ? 1.0 : boost::math::ibeta_inv(s + 1.0, n - s, 1.0 - alpha / 2.0);
    return {low, high};
}

double informed_distortion(const ChannelRealization& h, double snr, double bandwidth_ratio,
                           const SystemConfig& config, const ChannelInput& input,
                           const MiEstimatorSettings& settings, std::uint64_t trial_index) {
    if (!(bandwidth_ratio > 0.0))
        throw std::invalid_argument("informed_distortion: bandwidth ratio must be > 0");
    const double mi = input.kind == InputKind::Gaussian
                          ? gaussian_input_mi(h, snr, config)
                          : discrete_input_mi(h, snr, config, input, settings, trial_index).bits;
    return gaussian_rd_distortion(bandwidth_ratio * mi);
}

double siso_gaussian_outage_closed_form(double snr, double rate) {
    if (!(snr > 0.0))
        throw std::invalid_argument("siso_gaussian_outage_closed_form: snr must be > 0");
    if (!(rate >= 0.0))
        throw std::invalid_argument("siso_gaussian_outage_closed_form: rate must be >= 0");
    return 1.0 - std::exp(-(std::exp2(rate) - 1.0) / snr);
}

MiEstimatorSettings mi_settings_for(const Scenario& scenario) {
    MiEstimatorSettings settings;
    settings.noise_samples = scenario.mi_noise_samples;
    settings.mi_seed = scenario.seed ^ 0x9E3779B97F4A7C15ull;
    return settings;
}

SeparationRegime separation_regime(const Scenario& scenario) {
    const double source_distortion =
        gaussian_rd_distortion(scenario.source.bandwidth_ratio * scenario.coding_rate);
    if (source_distortion > scenario.distortion.target) return SeparationRegime::AlwaysOutage;
    if (source_distortion + scenario.distortion.d0 <= scenario.distortion.target)
        return SeparationRegime::NeverOutage;
    return SeparationRegime::InformationOutage;
}

SharedCounts shared_outage_counts(const Scenario& scenario, double snr, int workers) {
    scenario.validate();
    if (workers < 1) throw std::invalid_argument("shared_outage_counts: workers must be >= 1");
    if (!(snr >= 0.0)) throw std::invalid_argument("shared_outage_counts: snr must be >= 0");

    const double informed_threshold =
        optimal_separation_rate(scenario.distortion.target, scenario.source.bandwidth_ratio);
    const double separation_threshold = scenario.coding_rate;
    const MiEstimatorSettings settings = mi_settings_for(scenario);

    const std::uint64_t trials = scenario.trials;
    const std::uint64_t nworkers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), trials);

    std::vector<SharedCounts> partial(nworkers);
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, SharedCounts& out) {
        for (std::uint64_t t = lo; t < hi; ++t) {
            const ChannelRealization h =
                sample_channel(scenario.config, TrialStream{scenario.seed, t});
            const double mi =
                scenario.input.kind == InputKind::Gaussian
                    ? gaussian_input_mi(h, snr, scenario.config)
                    : discrete_input_mi(h, snr, scenario.config, scenario.input, settings, t)
                          .bits;
            // The informed event is strict (I < R) and the separation
            // event non-strict (I <= R_c); an exact floating-point tie
            // counts as outage for both so shared-sample counts stay
            // equal at R_c = R_c*.
            if (mi <= informed_threshold) ++out.informed;
            if (mi <= separation_threshold) ++out.separation;
            ++out.trials;
        }
    };

    // Contiguous trial ranges per worker; every trial's stream depends
    // only on (seed, trial_index), so the partitioning cannot change
    // any sample.
    const std::uint64_t chunk = trials / nworkers;
    const std::uint64_t rem = trials % nworkers;
    std::vector<std::thread> pool;
    std::uint64_t lo = 0;
    for (std::uint64_t w = 0; w < nworkers; ++w) {
        const std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        if (nworkers == 1) {
            run_range(lo, hi, partial[w]);
        } else {
            pool.emplace_back(run_range, lo, hi, std::ref(partial[w]));
        }
        lo = hi;
    }
    for (auto& th : pool) th.join();

    SharedCounts total;
    for (const auto& p : partial) {
        total.informed += p.informed;
        total.separation += p.separation;
        total.trials += p.trials;
    }
    return total;
}

namespace {

OutageEstimate make_estimate(std::uint64_t outage_count, std::uint64_t trials,
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

OutageEstimate informed_outage_mc(const Scenario& scenario, double snr, int workers) {
    const SharedCounts counts = shared_outage_counts(scenario, snr, workers);
    return make_estimate(counts.informed, counts.trials, scenario.confidence);
}

OutageEstimate separation_outage_mc(const Scenario& scenario, double snr, int workers) {
    scenario.validate();
    switch (separation_regime(scenario)) {
        case SeparationRegime::AlwaysOutage:
            return make_estimate(scenario.trials, scenario.trials, scenario.confidence);
        case SeparationRegime::NeverOutage:
            return make_estimate(0, scenario.trials, scenario.confidence);
        case SeparationRegime::InformationOutage:
            break;
    }
    const SharedCounts counts = shared_outage_counts(scenario, snr, workers);
    return make_estimate(counts.separation, counts.trials, scenario.confidence);
}

}  // namespace dosim
