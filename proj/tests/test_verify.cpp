#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "vam/verify.hpp"

using namespace vam;

namespace {
constexpr double pi = 3.14159265358979323846;

std::string fingerprint(const VerificationReport& rep) {
    std::ostringstream os;
    os.precision(17);
    os << rep.suite_id << '|' << rep.trials << '|' << rep.violations << '|' << rep.worst_margin << '|'
       << rep.seed << '|';
    if (rep.estimate) os << *rep.estimate;
    for (const auto& [k, v] : rep.details) os << '|' << k << '=' << v;
    for (const auto& row : rep.sweep) os << '|' << row.param << ':' << row.value;
    return os.str();
}
} // namespace

TEST_CASE("bounds suites hold with margin") {
    for (int n : {2, 3}) {
        auto ball = bounds_suite(DomainSpec::unit_ball(n), 4000, 42);
        CHECK(ball.violations == 0);
        CHECK(ball.worst_margin >= 0.0);
        auto half = bounds_suite(DomainSpec::half_space(n), 4000, 42);
        CHECK(half.violations == 0);
    }
    SUBCASE("boundary sweep approaches the factor two") {
        auto rep = bounds_suite(DomainSpec::unit_ball(2), 100, 1);
        REQUIRE(!rep.sweep.empty());
        CHECK(rep.sweep.front().param <= 1e-3);
        CHECK(rep.sweep.front().value >= 1.999);
        CHECK(rep.sweep.front().value <= 2.0);
        // ratio at parameter t is (pi/2) / arctan(1/(1-t))
        for (const auto& row : rep.sweep) {
            double expect = (pi / 2.0) / std::atan(1.0 / (1.0 - row.param));
            CHECK(row.value == doctest::Approx(expect).epsilon(1e-9));
        }
    }
    SUBCASE("half-space equality row") {
        Point x{0.0, 1.0}, y{0.0, 4.0};
        DomainSpec h = DomainSpec::half_space(2);
        CHECK(v_half(x, y).value == doctest::Approx(std::atan(0.75)).epsilon(1e-12));
        CHECK(std::abs(v_half(x, y).value - rho_star(h, x, y).value) < 1e-9);
    }
}

TEST_CASE("reports are reproducible from their seed") {
    auto a = bounds_suite(DomainSpec::unit_ball(2), 500, 7);
    auto b = bounds_suite(DomainSpec::unit_ball(2), 500, 7);
    CHECK(fingerprint(a) == fingerprint(b));
    auto c = equality_suite(DomainSpec::half_space(2), 200, 11);
    auto d = equality_suite(DomainSpec::half_space(2), 200, 11);
    CHECK(fingerprint(c) == fingerprint(d));
    auto e = conjecture_constant(DomainSpec::unit_ball(2), 10000, 3);
    auto f = conjecture_constant(DomainSpec::unit_ball(2), 10000, 3);
    CHECK(fingerprint(e) == fingerprint(f));
}

TEST_CASE("equality suites") {
    for (bool ball : {true, false}) {
        DomainSpec d = ball ? DomainSpec::unit_ball(2) : DomainSpec::half_space(2);
        auto rep = equality_suite(d, 1000, 42);
        CHECK(rep.violations == 0);
        CHECK(rep.details[0].second < 1e-9); // max equality residual
        CHECK(rep.details[1].second > 1e-6); // min perturbed residual
    }
}

TEST_CASE("Lipschitz estimates") {
    SUBCASE("identity map has ratio one") {
        DomainSpec b = DomainSpec::unit_ball(2);
        auto rep = lipschitz_ratio(MoebiusMap::identity(2), b, b, 500, 3);
        CHECK(rep.violations == 0);
        CHECK(*rep.estimate == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("extreme ball automorphism approaches the sharp factor") {
        auto rep = lipschitz_ball_suite(0.999, 4000, 7);
        CHECK(rep.violations == 0);
        CHECK(*rep.estimate >= 1.98);
        CHECK(*rep.estimate <= 2.0 + 1e-6);
        // reported conjectured supremum for this base point
        double reference = (4.0 / pi) * std::atan(1999.0);
        bool found = false;
        for (const auto& [k, v] : rep.details)
            if (k == "reference_supremum") {
                CHECK(v == doctest::Approx(reference).epsilon(1e-12));
                found = true;
            }
        CHECK(found);
    }
    SUBCASE("half-plane map with the doubling pair") {
        auto rep = lipschitz_half_suite(1, 1, 1, 2, 2000, 9);
        CHECK(rep.violations == 0);
        bool found = false;
        for (const auto& [k, v] : rep.details)
            if (k == "case1_pair_ratio") {
                CHECK(std::abs(v - 2.0) < 1e-9);
                found = true;
            }
        CHECK(found);
    }
    SUBCASE("affine half-plane maps are isometries") {
        auto rep = lipschitz_affine_suite(1000, 10);
        CHECK(rep.violations == 0);
        CHECK(rep.details[0].second < 1e-9);
    }
    SUBCASE("Cayley map stays within the two-sided bound in both directions") {
        auto rep = lipschitz_ratio(cayley_half_to_ball(), DomainSpec::half_space(2), DomainSpec::unit_ball(2),
                                   2000, 11);
        CHECK(rep.violations == 0);
        CHECK(*rep.estimate <= 2.0 + 1e-6);
        CHECK(rep.details[1].second >= 0.5 - 1e-6);
        auto back = lipschitz_ratio(cayley_half_to_ball().inverse(), DomainSpec::unit_ball(2),
                                    DomainSpec::half_space(2), 2000, 12);
        CHECK(back.violations == 0);
        CHECK(*back.estimate <= 2.0 + 1e-6);
    }
}

TEST_CASE("sharpness sweeps") {
    SUBCASE("ball boundary pairs") {
        std::vector<double> grid;
        for (int i = 0; i < 20; ++i) grid.push_back(0.9 + (0.9999 - 0.9) * i / 19.0);
        auto rep = sharpness_sweep(SweepFamily::ball_boundary_pair, grid);
        CHECK(rep.violations == 0);
        CHECK(rep.sweep.back().value > rep.sweep.front().value);
        CHECK(rep.sweep.back().value > 1.999);
    }
    SUBCASE("half-plane horizontal pairs sit at the sharp factor exactly") {
        std::vector<double> grid{0.5, 0.9, 0.99};
        auto rep = sharpness_sweep(SweepFamily::half_boundary_pair, grid);
        CHECK(rep.violations == 0);
        for (const auto& row : rep.sweep) CHECK(std::abs(row.value - 2.0) < 1e-12);
    }
    SUBCASE("upper family through the Cayley map") {
        std::vector<double> grid;
        for (int i = 0; i < 50; ++i) grid.push_back(0.5 + (0.999 - 0.5) * i / 49.0);
        auto rep = sharpness_sweep(SweepFamily::half_to_ball_upper, grid);
        CHECK(rep.violations == 0);
        CHECK(rep.sweep.back().value > 1.9);
    }
    SUBCASE("lower family doubles exactly") {
        std::vector<double> grid;
        for (int i = 0; i < 50; ++i) grid.push_back(0.05 + (1.0 - 0.05) * i / 49.0);
        auto rep = sharpness_sweep(SweepFamily::half_to_ball_lower, grid);
        CHECK(rep.violations == 0);
        for (const auto& row : rep.sweep) CHECK(std::abs(row.value - 2.0) < 1e-9);
        // the stated example point t = 1
        auto one = sharpness_sweep(SweepFamily::half_to_ball_lower, {1.0});
        CHECK(std::abs(one.sweep.front().value - 2.0) < 1e-9);
    }
    SUBCASE("inversion family") {
        std::vector<double> grid;
        for (int i = 0; i < 50; ++i) grid.push_back(0.01 + (1.5 - 0.01) * i / 49.0);
        auto rep = sharpness_sweep(SweepFamily::half_inversion, grid);
        CHECK(rep.violations == 0);
        CHECK(rep.sweep.front().value > 1.97);
    }
    SUBCASE("grids outside the valid interval are rejected") {
        CHECK_THROWS_AS(sharpness_sweep(SweepFamily::half_to_ball_upper, {1.5}), error);
        CHECK_THROWS_AS(sharpness_sweep(SweepFamily::half_inversion, {2.0}), error);
        CHECK_THROWS_AS(sharpness_sweep(SweepFamily::ball_boundary_pair, {}), error);
    }
}

TEST_CASE("constant estimation") {
    auto rep = conjecture_constant(DomainSpec::unit_ball(2), 20000, 5);
    CHECK_THROWS_AS(conjecture_constant(DomainSpec::unit_ball(2), 100, 5), error);
    CHECK(rep.violations == 0);
    CHECK(*rep.estimate >= 1.0);
    CHECK(*rep.estimate <= pi / std::log(3.0) + 1e-6);
    CHECK(*rep.estimate >= 0.755); // the pair (0, e1/2) already yields (pi/6)/log 2
    bool has_raw = false, has_ref = false;
    for (const auto& [k, v] : rep.details) {
        if (k == "raw_estimate") has_raw = true;
        if (k == "reference_interval_low") {
            has_ref = true;
            CHECK(v == doctest::Approx(1.431));
        }
    }
    CHECK(has_raw);
    CHECK(has_ref);
}

TEST_CASE("extremal configuration suites") {
    auto ball = extremal_config_suite(DomainSpec::unit_ball(2), 3000, 42);
    CHECK(ball.violations == 0);
    auto half = extremal_config_suite(DomainSpec::half_space(2), 3000, 42);
    CHECK(half.violations == 0);
}

TEST_CASE("punctured-space suite") {
    auto rep = punctured_suite(5000, 42);
    CHECK(rep.violations == 0);
    CHECK(rep.worst_margin >= 0.0);
}
