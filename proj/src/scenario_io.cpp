#include "dosim/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dosim {

using nlohmann::json;

namespace {

void require_keys(const json& obj, const std::string& section,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object())
        throw std::runtime_error("scenario: section '" + section + "' must be an object");
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key))
            throw std::runtime_error("scenario: unknown key '" + key + "' in section '" +
                                     section + "'");
    }
}

template <typename T>
T get_required(const json& obj, const std::string& section, const std::string& key) {
    if (!obj.contains(key))
        throw std::runtime_error("scenario: missing key '" + key + "' in section '" + section +
                                 "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::runtime_error("scenario: bad value for '" + section + "." + key +
                                 "': " + e.what());
    }
}

std::vector<std::complex<double>> psk_points(int order) {
    std::vector<std::complex<double>> pts;
    pts.reserve(order);
    for (int k = 0; k < order; ++k) {
        const double phase = 2.0 * M_PI * k / order;
        pts.emplace_back(std::cos(phase), std::sin(phase));
    }
    return pts;
}

std::vector<std::complex<double>> qam_points(int side) {
    std::vector<std::complex<double>> pts;
    double energy = 0.0;
    for (int i = 0; i < side; ++i) {
        for (int q = 0; q < side; ++q) {
            const double re = 2.0 * i - (side - 1);
            const double im = 2.0 * q - (side - 1);
            pts.emplace_back(re, im);
            energy += re * re + im * im;
        }
    }
    const double scale = 1.0 / std::sqrt(energy / pts.size());
    for (auto& p : pts) p *= scale;
    return pts;
}

}  // namespace

ChannelInput named_constellation(const std::string& name) {
    if (name == "bpsk") return ChannelInput::discrete({{-1.0, 0.0}, {1.0, 0.0}});
    if (name == "qpsk") return ChannelInput::discrete(psk_points(4));
    if (name == "8psk") return ChannelInput::discrete(psk_points(8));
    if (name == "16qam") return ChannelInput::discrete(qam_points(4));
    if (name == "64qam") return ChannelInput::discrete(qam_points(8));
    throw std::runtime_error("scenario: unknown constellation '" + name + "'");
}

LoadedScenario parse_scenario(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("scenario: ") + e.what());
    }
    require_keys(doc, "<top level>",
                 {"system", "input", "source", "distortion", "separation", "sweep"});

    LoadedScenario loaded;
    Scenario& sc = loaded.scenario;

    const json& system = doc.at("system");
    require_keys(system, "system", {"nt", "nr", "blocks"});
    sc.config.n_t = get_required<int>(system, "system", "nt");
    sc.config.n_r = get_required<int>(system, "system", "nr");
    sc.config.blocks = get_required<int>(system, "system", "blocks");

    const json& input = doc.at("input");
    require_keys(input, "input", {"kind", "constellation", "m"});
    const auto kind = get_required<std::string>(input, "input", "kind");
    if (kind == "gaussian") {
        if (input.contains("constellation") || input.contains("m"))
            throw std::runtime_error("scenario: gaussian input takes no constellation or m");
        sc.input = ChannelInput::gaussian();
    } else if (kind == "discrete") {
        sc.input = named_constellation(get_required<std::string>(input, "input", "constellation"));
        if (input.contains("m") && input.at("m").get<int>() != sc.input.m)
            throw std::runtime_error("scenario: input.m does not match the constellation");
    } else {
        throw std::runtime_error("scenario: input.kind must be 'gaussian' or 'discrete'");
    }

    const json& source = doc.at("source");
    require_keys(source, "source", {"bandwidth_ratio"});
    sc.source.bandwidth_ratio = get_required<double>(source, "source", "bandwidth_ratio");

    const json& distortion = doc.at("distortion");
    require_keys(distortion, "distortion", {"target", "d0"});
    sc.distortion.target = get_required<double>(distortion, "distortion", "target");
    sc.distortion.d0 = get_required<double>(distortion, "distortion", "d0");
    sc.distortion.validate();
    sc.source.validate();

    if (doc.contains("separation")) {
        loaded.with_separation = true;
        const json& separation = doc.at("separation");
        require_keys(separation, "separation", {"rate"});
        const json& rate = separation.at("rate");
        if (rate.is_string()) {
            if (rate.get<std::string>() != "optimal")
                throw std::runtime_error("scenario: separation.rate must be a number or 'optimal'");
            loaded.rate_was_optimal = true;
            sc.coding_rate =
                optimal_separation_rate(sc.distortion.target, sc.source.bandwidth_ratio);
        } else if (rate.is_number()) {
            sc.coding_rate = rate.get<double>();
        } else {
            throw std::runtime_error("scenario: separation.rate must be a number or 'optimal'");
        }
    }

    const json& sweep = doc.at("sweep");
    require_keys(sweep, "sweep",
                 {"snr_db_start", "snr_db_stop", "snr_db_step", "trials", "seed", "confidence",
                  "noise_samples"});
    const double start = get_required<double>(sweep, "sweep", "snr_db_start");
    const double stop = get_required<double>(sweep, "sweep", "snr_db_stop");
    const double step = get_required<double>(sweep, "sweep", "snr_db_step");
    if (!(step > 0.0) || stop < start)
        throw std::runtime_error("scenario: need snr_db_step > 0 and snr_db_stop >= snr_db_start");
    for (double snr = start; snr <= stop + 1e-9; snr += step) sc.snr_grid_db.push_back(snr);
    sc.trials = get_required<std::uint64_t>(sweep, "sweep", "trials");
    sc.seed = get_required<std::uint64_t>(sweep, "sweep", "seed");
    if (sweep.contains("confidence")) sc.confidence = sweep.at("confidence").get<double>();
    if (sweep.contains("noise_samples")) sc.mi_noise_samples = sweep.at("noise_samples").get<int>();

    sc.validate();
    return loaded;
}

LoadedScenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("scenario: cannot open '" + path + "'");
    return parse_scenario(in);
}

std::string scenario_echo_json(const LoadedScenario& loaded) {
    const Scenario& sc = loaded.scenario;
    json doc;
    doc["system"] = {{"nt", sc.config.n_t}, {"nr", sc.config.n_r}, {"blocks", sc.config.blocks}};
    doc["input"] = {{"kind", sc.input.kind == InputKind::Gaussian ? "gaussian" : "discrete"}};
    if (sc.input.kind == InputKind::Discrete) doc["input"]["m"] = sc.input.m;
    doc["source"] = {{"bandwidth_ratio", sc.source.bandwidth_ratio}};
    doc["distortion"] = {{"target", sc.distortion.target}, {"d0", sc.distortion.d0}};
    if (loaded.with_separation)
        doc["separation"] = {{"rate", sc.coding_rate},
                             {"resolved_from_optimal", loaded.rate_was_optimal}};
    doc["sweep"] = {{"trials", sc.trials},
                    {"seed", sc.seed},
                    {"confidence", sc.confidence},
                    {"noise_samples", sc.mi_noise_samples}};
    return doc.dump();
}

}  // namespace dosim
