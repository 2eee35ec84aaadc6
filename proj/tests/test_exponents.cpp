#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dosim/exponents.hpp"
#include "dosim/outage.hpp"

using namespace dosim;

namespace {
ChannelInput bpsk() { return ChannelInput::discrete({{-1.0, 0.0}, {1.0, 0.0}}); }
}

TEST_CASE("informed exponent") {
    SUBCASE("gaussian inputs get full diversity") {
        CHECK(informed_exponent({4, 4, 2}, ChannelInput::gaussian(), 2.0, 0.05).value == 32.0);
        CHECK(informed_exponent({4, 4, 2}, ChannelInput::gaussian(), 2.0, 1.0).value == 32.0);
        CHECK(informed_exponent({1, 1, 1}, ChannelInput::gaussian(), 1.0, 0.5).value == 1.0);
    }
    SUBCASE("discrete inputs follow the Singleton bound at R_s(D)/b") {
        // R_c(0.06)/1.5 = 1.353 -> exponent 4
        const auto r = informed_exponent({2, 2, 2}, bpsk(), 1.5, 0.06);
        CHECK(r.value == 4.0);
    }
    SUBCASE("domain violations") {
        CHECK_THROWS(informed_exponent({2, 2, 1}, ChannelInput::gaussian(), 0.0, 0.5));
        CHECK_THROWS(informed_exponent({2, 2, 1}, ChannelInput::gaussian(), 1.0, 1.5));
    }
}

TEST_CASE("separation exponent") {
    CHECK(separation_exponent({2, 2, 2}, bpsk(), 1.353).value == 4.0);
    CHECK(separation_exponent({2, 2, 2}, bpsk(), 1.7).value == 2.0);
    CHECK(separation_exponent({2, 2, 2}, ChannelInput::gaussian(), 0.7).value == 8.0);
    // beyond the formula's positive support the exponent clamps to zero
    CHECK(separation_exponent({2, 2, 2}, bpsk(), 2.5).value == 0.0);
    CHECK(separation_exponent({2, 2, 2}, bpsk(), 2.5).regime == "zero");
    CHECK_THROWS(separation_exponent({2, 2, 2}, bpsk(), -0.1));
}

TEST_CASE("floor snapping at printed-precision rate anchors") {
    // N (n_t - R/m) = 2 exactly at R = 1; a hair above must not drop a step
    const auto at_anchor = separation_exponent({2, 2, 2}, bpsk(), 1.0 + 1e-12);
    CHECK(at_anchor.value == separation_exponent({2, 2, 2}, bpsk(), 1.0).value);
}

TEST_CASE("dmt curve") {
    const SystemConfig config{2, 2, 2};
    CHECK(dmt_curve(config, 0.0) == 8.0);
    CHECK(dmt_curve(config, 1.0) == 2.0);
    CHECK(dmt_curve(config, 0.5) == 5.0);
    CHECK(dmt_curve(config, 2.0) == 0.0);
    CHECK_THROWS(dmt_curve(config, -0.1));
    CHECK_THROWS(dmt_curve(config, 2.1));

    SUBCASE("piecewise linear, convex, hits zero at min(nt,nr)") {
        const SystemConfig big{4, 3, 2};
        CHECK(dmt_curve(big, 0.0) == 24.0);
        CHECK(dmt_curve(big, 3.0) == 0.0);
        double prev_slope = -1e18;
        for (int k = 0; k < 3; ++k) {
            const double slope = dmt_curve(big, k + 1.0) - dmt_curve(big, k);
            CHECK(slope >= prev_slope);  // convexity: slopes nondecreasing
            prev_slope = slope;
            // linear inside the segment
            const double mid = dmt_curve(big, k + 0.5);
            CHECK(mid == doctest::Approx(0.5 * (dmt_curve(big, k) + dmt_curve(big, k + 1.0))));
        }
    }
}

TEST_CASE("expected-distortion informed exponent") {
    CHECK(expected_tx_exponent({4, 4, 2}, 0.25).value == doctest::Approx(2.0));
    CHECK(expected_tx_exponent({4, 4, 2}, 10.0).value == doctest::Approx(32.0));
    CHECK(expected_tx_exponent({4, 4, 2}, 1e-9).value == doctest::Approx(0.0).epsilon(1e-6));

    SUBCASE("bounded by full diversity, saturating exactly at the corner") {
        const SystemConfig config{3, 2, 2};
        const double full = 12.0;
        const double corner = 0.5 * config.blocks * (2.0 * 2 - 1 + 1);  // 2b/N >= 2min-1+|nt-nr|
        double prev = -1.0;
        for (double b = 0.05; b < 12.0; b += 0.05) {
            const double v = expected_tx_exponent(config, b).value;
            CHECK(v <= full + 1e-12);
            CHECK(v >= prev - 1e-12);  // nondecreasing in b
            if (b >= corner) CHECK(v == doctest::Approx(full));
            if (v >= full - 1e-12) CHECK(b >= corner - 0.05);
            prev = v;
        }
    }
}

TEST_CASE("expected-distortion separation exponent") {
    SUBCASE("2x2 N=1 analytic crossing at b = 0.5") {
        const auto r = expected_sep_exponent({2, 2, 1}, 0.5);
        CHECK(r.oracle_value == doctest::Approx(1.0).epsilon(1e-6));
        // with N = 1 the paper formula agrees with the variational value
        CHECK(r.formula_value == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("large b approaches full diversity in the oracle") {
        const auto r = expected_sep_exponent({2, 2, 1}, 1e6);
        CHECK(r.oracle_value == doctest::Approx(4.0).epsilon(1e-3));
    }
    SUBCASE("b -> 0 gives 0") {
        const auto r = expected_sep_exponent({2, 2, 1}, 1e-9);
        CHECK(r.oracle_value == doctest::Approx(0.0).epsilon(1e-6));
        CHECK(r.formula_value == doctest::Approx(0.0).epsilon(1e-6));
    }
    SUBCASE("nondecreasing in b, both routes") {
        double prev_formula = -1.0, prev_oracle = -1.0;
        for (double b = 0.1; b <= 8.0; b += 0.1) {
            const auto r = expected_sep_exponent({3, 2, 2}, b);
            CHECK(r.formula_value >= prev_formula - 1e-9);
            CHECK(r.oracle_value >= prev_oracle - 1e-9);
            prev_formula = r.formula_value;
            prev_oracle = r.oracle_value;
        }
    }
}

TEST_CASE("minimum bandwidth ratio for discrete inputs") {
    CHECK(std::abs(min_bandwidth_ratio(0.05, 1) - 2.1610) < 1e-4);
    CHECK(min_bandwidth_ratio(1.0, 2) == doctest::Approx(0.0));
    CHECK(min_bandwidth_ratio(0.05, 2) ==
          doctest::Approx(min_bandwidth_ratio(0.05, 1) / 2.0));
    CHECK_THROWS(min_bandwidth_ratio(0.05, 0));
}

TEST_CASE("informed and separation Singleton exponents coincide at the optimal rate") {
    for (int i = 1; i <= 10; ++i) {
        const double d_bar = i / 10.5;
        for (int j = 1; j <= 10; ++j) {
            const double b = j * 0.35;
            const auto informed = informed_exponent({2, 2, 2}, bpsk(), b, d_bar);
            const auto separation =
                separation_exponent({2, 2, 2}, bpsk(), optimal_separation_rate(d_bar, b));
            CHECK(informed.value == separation.value);
        }
    }
}

TEST_CASE("Singleton exponent steps down by n_r") {
    const SystemConfig config{2, 3, 2};
    double prev = separation_exponent(config, bpsk(), 0.0).value;
    for (double rate = 0.01; rate <= 4.0; rate += 0.01) {
        const double v = separation_exponent(config, bpsk(), rate).value;
        CHECK(v <= prev);
        const double drop = prev - v;
        CHECK((drop == 0.0 || drop == 3.0 || v == 0.0));  // steps of n_r until the clamp
        prev = v;
    }
}

TEST_CASE("empirical slope estimator") {
    SUBCASE("exact power law") {
        std::vector<std::pair<double, double>> pts;
        for (double snr : {10.0, 30.0, 100.0, 300.0})
            pts.emplace_back(snr, std::pow(snr, -4.0));
        const auto est = empirical_slope(pts);
        CHECK(std::abs(est.slope - 4.0) < 1e-9);
        CHECK(est.rms_residual < 1e-9);
    }
    SUBCASE("SISO closed form slope tends to 1 at high snr") {
        std::vector<std::pair<double, double>> pts;
        for (double snr_db = 20.0; snr_db <= 40.0; snr_db += 2.0) {
            const double snr = snr_db_to_linear(snr_db);
            pts.emplace_back(snr, siso_gaussian_outage_closed_form(snr, 1.0));
        }
        CHECK(std::abs(empirical_slope(pts).slope - 1.0) < 0.05);
    }
    SUBCASE("degenerate inputs rejected") {
        CHECK_THROWS(empirical_slope({{10.0, 0.1}}));
        CHECK_THROWS(empirical_slope({{10.0, 0.1}, {10.0, 0.2}}));
        CHECK_THROWS(empirical_slope({{10.0, 0.1}, {20.0, 0.0}}));
    }
}
