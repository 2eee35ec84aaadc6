#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "dosim/model.hpp"

using namespace dosim;

TEST_CASE("gaussian rate-distortion function") {
    CHECK(gaussian_rd_distortion(0.0) == doctest::Approx(1.0));
    CHECK(gaussian_rd_distortion(0.5) == doctest::Approx(0.5));
    CHECK(gaussian_rd_distortion(2.161) == doctest::Approx(0.05).epsilon(0.02));
    CHECK(std::abs(gaussian_rd_distortion(2.161) - 0.05) < 1e-3);
    CHECK_THROWS_AS(gaussian_rd_distortion(-0.1), std::invalid_argument);
}

TEST_CASE("gaussian rate-distortion inverse") {
    CHECK(gaussian_rd_rate(1.0) == doctest::Approx(0.0));
    CHECK(gaussian_rd_rate(0.25) == doctest::Approx(1.0));
    CHECK(std::abs(gaussian_rd_rate(0.05) - 2.1610) < 1e-4);
    CHECK_THROWS_AS(gaussian_rd_rate(0.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_rd_rate(1.5), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_rd_rate(-0.2), std::invalid_argument);
}

TEST_CASE("rate <-> distortion round trip and monotonicity") {
    double prev = 2.0;
    for (double r = 0.0; r <= 30.0; r += 0.37) {
        const double d = gaussian_rd_distortion(r);
        CHECK(std::abs(gaussian_rd_rate(d) - r) < 1e-12);
        CHECK(d < prev);  // strictly decreasing
        prev = d;
    }
}

TEST_CASE("optimal separation rate") {
    CHECK(std::abs(optimal_separation_rate(0.05, 2.0) - 1.08) < 1e-3 + 5e-4);
    CHECK(optimal_separation_rate(0.05, 2.0) == doctest::Approx(1.0804820237));
    CHECK(optimal_separation_rate(0.06, 1.5) == doctest::Approx(1.3529645630));
    CHECK(optimal_separation_rate(1.0, 3.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(optimal_separation_rate(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(optimal_separation_rate(0.0, 1.0), std::invalid_argument);

    // strictly decreasing in target distortion and bandwidth ratio
    CHECK(optimal_separation_rate(0.04, 2.0) > optimal_separation_rate(0.05, 2.0));
    CHECK(optimal_separation_rate(0.05, 2.5) < optimal_separation_rate(0.05, 2.0));
}

TEST_CASE("admissible coding-rate range") {
    SUBCASE("upper limit vacuous when target <= d0") {
        const auto range = admissible_rate_range(0.05, 0.5, 2.0);
        CHECK(range.lo == doctest::Approx(1.0804820237));
        CHECK(std::isinf(range.hi));
    }
    SUBCASE("both limits finite") {
        const auto range = admissible_rate_range(0.9, 0.4, 1.0);
        CHECK(std::abs(range.lo - 0.0760) < 1e-4);
        CHECK(range.hi == doctest::Approx(0.5));
    }
    SUBCASE("zero-rate lower limit") {
        const auto range = admissible_rate_range(1.0, 0.5, 1.0);
        CHECK(range.lo == doctest::Approx(0.0));
        CHECK(range.hi == doctest::Approx(0.5));
    }
    SUBCASE("left endpoint is the optimal rate") {
        for (double d_bar : {0.02, 0.1, 0.5, 0.97})
            for (double b : {0.5, 1.0, 2.0, 4.0}) {
                const auto range = admissible_rate_range(d_bar, 0.3, b);
                CHECK(range.lo == doctest::Approx(optimal_separation_rate(d_bar, b)));
                CHECK(range.lo < range.hi);
            }
    }
    CHECK_THROWS_AS(admissible_rate_range(0.5, -0.1, 1.0), std::invalid_argument);
}

TEST_CASE("channel input invariants") {
    CHECK_THROWS(ChannelInput::discrete({{1.0, 0.0}, {2.0, 0.0}}));  // energy != 1
    CHECK_THROWS(ChannelInput::discrete({{1.0, 0.0}}));              // not a power of two >= 2
    const auto bpsk = ChannelInput::discrete({{-1.0, 0.0}, {1.0, 0.0}});
    CHECK(bpsk.m == 1);
    ChannelInput bad = ChannelInput::gaussian();
    bad.points.push_back({1.0, 0.0});
    CHECK_THROWS(bad.validate());
}

TEST_CASE("scenario validation") {
    Scenario sc;
    sc.snr_grid_db = {0.0, 5.0, 10.0};
    CHECK_NOTHROW(sc.validate());
    sc.snr_grid_db = {0.0, 5.0, 5.0};
    CHECK_THROWS(sc.validate());
    sc.snr_grid_db = {0.0, 5.0};
    sc.trials = 0;
    CHECK_THROWS(sc.validate());
}
