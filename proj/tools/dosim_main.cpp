#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dosim/exponents.hpp"
#include "dosim/report.hpp"
#include "dosim/scenario_io.hpp"
#include "dosim/sweep.hpp"

namespace {

int default_workers() {
    if (const char* env = std::getenv("DOSIM_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

const char* regime_name(dosim::SeparationRegime regime) {
    switch (regime) {
        case dosim::SeparationRegime::AlwaysOutage: return "always-outage";
        case dosim::SeparationRegime::NeverOutage: return "never-outage";
        case dosim::SeparationRegime::InformationOutage: return "information-outage";
    }
    return "?";
}

int cmd_exponents(const std::string& scenario_path, bool csv) {
    const auto loaded = dosim::load_scenario_file(scenario_path);
    const dosim::Scenario& sc = loaded.scenario;

    const auto informed = dosim::informed_exponent(sc.config, sc.input,
                                                   sc.source.bandwidth_ratio,
                                                   sc.distortion.target);
    std::optional<dosim::ExponentResult> separation;
    if (loaded.with_separation)
        separation = dosim::separation_exponent(sc.config, sc.input, sc.coding_rate);
    const auto expected_tx = dosim::expected_tx_exponent(sc.config, sc.source.bandwidth_ratio);
    const auto expected_sep = dosim::expected_sep_exponent(sc.config, sc.source.bandwidth_ratio);
    const int max_gain = std::min(sc.config.n_t, sc.config.n_r);

    if (csv) {
        std::cout << "# scenario: " << dosim::scenario_echo_json(loaded) << "\n";
        std::cout << "quantity,value,regime\n";
        std::cout << "informed_exponent," << informed.value << ',' << informed.regime << "\n";
        if (separation)
            std::cout << "separation_exponent," << separation->value << ',' << separation->regime
                      << "\n";
        for (int k = 0; k <= max_gain; ++k)
            std::cout << "dmt_anchor_" << k << ',' << dosim::dmt_curve(sc.config, k) << ",\n";
        std::cout << "expected_tx_exponent," << expected_tx.value << ',' << expected_tx.regime
                  << "\n";
        std::cout << "expected_sep_exponent_formula," << expected_sep.formula_value << ",j="
                  << expected_sep.regime_index
                  << (expected_sep.beyond_last_regime ? " (beyond last regime)" : "") << "\n";
        std::cout << "expected_sep_exponent_oracle," << expected_sep.oracle_value << ",\n";
        if (sc.input.kind == dosim::InputKind::Discrete)
            std::cout << "min_bandwidth_ratio,"
                      << dosim::min_bandwidth_ratio(sc.distortion.target, sc.input.m) << ",\n";
        return 0;
    }

    std::cout << "scenario: " << dosim::scenario_echo_json(loaded) << "\n";
    std::cout << "informed exponent:        " << informed.value << "  [" << informed.regime
              << "]\n";
    if (separation)
        std::cout << "separation exponent:      " << separation->value << "  ["
                  << separation->regime << "]  (R_c = " << sc.coding_rate << ")\n";
    std::cout << "dmt anchors:              ";
    for (int k = 0; k <= max_gain; ++k)
        std::cout << "(" << k << ", " << dosim::dmt_curve(sc.config, k) << ") ";
    std::cout << "\n";
    std::cout << "expected-distortion tx:   " << expected_tx.value << "  [" << expected_tx.regime
              << "]\n";
    std::cout << "expected-distortion sep:  formula " << expected_sep.formula_value << " (regime j="
              << expected_sep.regime_index
              << (expected_sep.beyond_last_regime ? ", beyond last regime" : "") << "), oracle "
              << expected_sep.oracle_value << "\n";
    if (sc.input.kind == dosim::InputKind::Discrete)
        std::cout << "min bandwidth ratio:      "
                  << dosim::min_bandwidth_ratio(sc.distortion.target, sc.input.m) << "\n";
    return 0;
}

int cmd_sweep(const std::string& scenario_path, int workers, const std::string& out_prefix,
              std::optional<std::pair<double, double>> window_db,
              std::optional<double> confidence) {
    auto loaded = dosim::load_scenario_file(scenario_path);
    if (confidence) loaded.scenario.confidence = *confidence;

    std::cout << "resolved R_c: " << loaded.scenario.coding_rate
              << (loaded.rate_was_optimal ? " (optimal)" : "") << "\n";
    if (loaded.with_separation)
        std::cout << "separation regime: " << regime_name(dosim::separation_regime(loaded.scenario))
                  << "\n";

    auto result = dosim::run_sweep(loaded.scenario, workers, loaded.with_separation);
    if (window_db) dosim::attach_slopes(result, window_db->first, window_db->second);

    const std::string path = out_prefix + ".csv";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return 1;
    }
    dosim::write_result_csv(result, dosim::scenario_echo_json(loaded), out);
    std::cout << "wrote " << path << " (" << result.rows.size() << " rows)\n";
    if (result.slope_informed)
        std::cout << "informed slope:   " << result.slope_informed->estimate.slope
                  << " (rms residual " << result.slope_informed->estimate.rms_residual << ")\n";
    if (result.slope_separation)
        std::cout << "separation slope: " << result.slope_separation->estimate.slope
                  << " (rms residual " << result.slope_separation->estimate.rms_residual << ")\n";
    return 0;
}

int cmd_figure(const std::vector<std::string>& csv_paths, const std::string& out_path) {
    std::vector<std::pair<std::string, dosim::ResultTable>> tables;
    for (const auto& path : csv_paths) {
        std::string name = path;
        if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
            name = name.substr(slash + 1);
        if (name.size() > 4 && name.ends_with(".csv")) name.resize(name.size() - 4);
        tables.emplace_back(name, dosim::load_result_csv(path));
    }
    const std::string svg = dosim::render_figure(tables);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 1;
    }
    out << svg;
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distortion-outage simulation for MIMO block-fading channels"};
    app.require_subcommand(1);

    std::string scenario_path;
    bool csv_flag = false;
    auto* exponents = app.add_subcommand("exponents", "Print closed-form SNR exponents");
    exponents->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    exponents->add_flag("--csv", csv_flag, "Machine-readable CSV output");

    std::string sweep_scenario;
    int workers = default_workers();
    std::string out_prefix = "sweep";
    std::vector<double> window_vals;
    double confidence_opt = -1.0;
    auto* sweep = app.add_subcommand("sweep", "Run Monte Carlo outage sweep");
    sweep->add_option("scenario", sweep_scenario, "Scenario JSON file")->required();
    sweep->add_option("--workers", workers, "Worker thread count")->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_prefix, "Output path prefix ({prefix}.csv)");
    sweep->add_option("--window-db", window_vals, "Slope-fit window lo,hi in dB")
        ->delimiter(',')
        ->expected(2);
    sweep->add_option("--confidence", confidence_opt, "Confidence level override");

    std::vector<std::string> csv_paths;
    std::string figure_out = "figure.svg";
    auto* figure = app.add_subcommand("figure", "Render result CSVs as an SVG plot");
    figure->add_option("csv", csv_paths, "Result CSV files")->required();
    figure->add_option("--out", figure_out, "Output SVG path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (exponents->parsed()) return cmd_exponents(scenario_path, csv_flag);
        if (sweep->parsed()) {
            std::optional<std::pair<double, double>> window;
            if (window_vals.size() == 2) window = {window_vals[0], window_vals[1]};
            std::optional<double> confidence;
            if (confidence_opt > 0.0) confidence = confidence_opt;
            return cmd_sweep(sweep_scenario, workers, out_prefix, window, confidence);
        }
        if (figure->parsed()) return cmd_figure(csv_paths, figure_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
