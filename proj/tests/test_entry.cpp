#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "detergame/entry.hpp"
#include "detergame/model.hpp"
#include "test_support.hpp"

using namespace detergame;
using testutil::reference_params;

TEST_CASE("gross profit values on both branches") {
    const ModelParams p = reference_params();
    CHECK(entrant_gross_profit(p, 0) == 0.0);
    CHECK(entrant_gross_profit(p, 1) == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(entrant_gross_profit(p, 2) == doctest::Approx(6).epsilon(1e-12));  // the peak
    // branch point 16/7: both formulas give 288/49
    CHECK(entrant_gross_profit(p, 16.0 / 7) ==
          doctest::Approx(288.0 / 49).epsilon(1e-12));
    CHECK(entrant_gross_profit(p, 3) == doctest::Approx(5.28125).epsilon(1e-12));
    CHECK_THROWS_AS(entrant_gross_profit(p, -1), std::domain_error);
}

TEST_CASE("gross profit is floored at zero beyond the exhaustion output") {
    ModelParams p = reference_params();
    p.phi = 1.8;  // exhaustion at (alpha-c)/phi = 4.44...
    CHECK(entrant_gross_profit(p, 4.6) == 0.0);
    CHECK(entrant_gross_profit(p, 4.9) == 0.0);
}

TEST_CASE("profit peak") {
    const ModelParams p = reference_params();
    const EntrantPeak peak = entrant_profit_peak(p);
    CHECK(peak.x_peak == doctest::Approx(2).epsilon(1e-12));
    CHECK(peak.max_profit == doctest::Approx(6).epsilon(1e-12));
    CHECK_FALSE(peak.plateau);

    ModelParams flat = reference_params();
    flat.phi = 0;
    const EntrantPeak plateau = entrant_profit_peak(flat);
    CHECK(plateau.x_peak == doctest::Approx(2).epsilon(1e-12));
    CHECK(plateau.max_profit == doctest::Approx(8).epsilon(1e-12));
    CHECK(plateau.plateau);

    ModelParams generic = reference_params();
    generic.phi = generic.theta;
    CHECK_THROWS_AS(entrant_profit_peak(generic), std::domain_error);
}

TEST_CASE("entry regions at the reference parameters") {
    const ModelParams p = reference_params();
    const EntryRegions at5 = entry_regions(p, 5);
    REQUIRE_FALSE(at5.accommodation_empty);
    CHECK(at5.x_low == doctest::Approx((6 - std::sqrt(6.0)) / 3).epsilon(1e-12));
    REQUIRE(at5.x_high.has_value());
    CHECK(*at5.x_high == doctest::Approx(16 - 4 * std::sqrt(10.0)).epsilon(1e-12));
    CHECK(at5.exhaustion_point.has_value());
    CHECK(*at5.exhaustion_point == doctest::Approx(16).epsilon(1e-12));

    // cost above the peak: no output lets the rival recoup it
    CHECK(entry_regions(p, 6).accommodation_empty);
    CHECK(entry_regions(p, 7).accommodation_empty);

    const EntryRegions at0 = entry_regions(p, 0);
    CHECK(at0.x_low == 0.0);
    REQUIRE(at0.x_high.has_value());
    CHECK(*at0.x_high == doctest::Approx(16).epsilon(1e-12));
}

TEST_CASE("zero cross-erosion leaves the accommodation region unbounded") {
    ModelParams p = reference_params();
    p.phi = 0;
    const EntryRegions regions = entry_regions(p, 5);  // below the plateau level 8
    REQUIRE_FALSE(regions.accommodation_empty);
    CHECK_FALSE(regions.x_high.has_value());
    CHECK_FALSE(regions.exhaustion_point.has_value());
    CHECK(regions.in_accommodation(1e6));
    CHECK(entry_decision(p, 1e6, 5) == EntryDecision::Enter);

    // cost at the plateau level: profit never strictly exceeds it
    CHECK(entry_regions(p, 8).accommodation_empty);
}

TEST_CASE("region machinery rejects the no-edge model") {
    ModelParams p = reference_params();
    p.phi = p.theta;
    CHECK_THROWS_AS(entry_regions(p, 1), std::domain_error);
}

TEST_CASE("entry decisions") {
    const ModelParams p = reference_params();
    CHECK(entry_decision(p, 2, 5) == EntryDecision::Enter);
    CHECK(entry_decision(p, 0.5, 5) == EntryDecision::StayOut);
    CHECK(entry_decision(p, 4, 5) == EntryDecision::StayOut);
    // exactly at the boundary the tie goes to staying out
    const double x_low = entry_regions(p, 5).x_low;
    CHECK(entry_decision(p, x_low, 5) == EntryDecision::StayOut);

    ModelParams generic = reference_params();
    generic.phi = generic.theta;
    CHECK(entry_decision(generic, 2, 0.01) == EntryDecision::StayOut);
    CHECK(entry_decision(generic, 2, 0) == EntryDecision::Indifferent);
}

TEST_CASE("the profit function is continuously differentiable at the branch point") {
    testutil::Sampler sampler(314159);
    for (int trial = 0; trial < 500; ++trial) {
        const ModelParams p = sampler.draw();
        const double m = p.markup();
        const double g = p.theta - p.phi;
        const double xc = derived_constants(p).x_crossover;

        const double left_value = g * xc * (m - p.theta * xc) / p.beta;
        const double right_value = (m - p.phi * xc) * (m - p.phi * xc) / (4 * p.beta);
        CHECK(std::abs(left_value - right_value) <= 1e-9);

        const double left_slope = g * (m - 2 * p.theta * xc) / p.beta;
        const double right_slope = -p.phi * (m - p.phi * xc) / (2 * p.beta);
        const double common_slope = -p.phi * g * m / (p.beta * (2 * p.theta - p.phi));
        CHECK(std::abs(left_slope - right_slope) <= 1e-9);
        CHECK(std::abs(left_slope - common_slope) <= 1e-9);

        // One-sided second-order differences built from profit values only:
        // exact for the quadratic branches, so they recover each one-sided
        // derivative and must agree across the branch point.
        const double h = 1e-5;
        auto f = [&](double x) { return entrant_gross_profit(p, x); };
        const double fd_left = (3 * f(xc) - 4 * f(xc - h) + f(xc - 2 * h)) / (2 * h);
        const double fd_right = (-3 * f(xc) + 4 * f(xc + h) - f(xc + 2 * h)) / (2 * h);
        CHECK(std::abs(fd_left - common_slope) <= 1e-6);
        CHECK(std::abs(fd_right - common_slope) <= 1e-6);

        // A central difference straddling the branch point carries an O(h)
        // truncation term from the second-derivative jump; verify it is fully
        // explained by that jump, which is the numerical signature of a C^1
        // (not C^2) joint.
        const double fd_central = (f(xc + h) - f(xc - h)) / (2 * h);
        const double curvature_jump =
            p.phi * p.phi / (2 * p.beta) + 2 * p.theta * g / p.beta;
        CHECK(std::abs(fd_central - common_slope) <= h / 4 * curvature_jump + 1e-9);
    }
}

TEST_CASE("profit rises to the peak and falls to exhaustion") {
    testutil::Sampler sampler(271828);
    for (int trial = 0; trial < 100; ++trial) {
        ModelParams p = sampler.draw_positive_phi();
        const DerivedConstants d = derived_constants(p);
        const double upper = p.markup() / p.phi;
        const double h = upper / 10000;
        double prev = entrant_gross_profit(p, h);
        for (int i = 2; i < 10000; ++i) {
            const double x = i * h;
            const double cur = entrant_gross_profit(p, x);
            if (x <= d.x_entrant_peak)
                CHECK(cur > prev);
            else if (x - h >= d.x_entrant_peak)
                CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("region roots solve the profit equation and pick the right branch") {
    testutil::Sampler sampler(42424242);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p = sampler.draw();
        const DerivedConstants d = derived_constants(p);
        const double crossover_level = entrant_gross_profit(p, d.x_crossover);
        for (int k = 1; k <= 40; ++k) {
            const double r = d.entrant_max_profit * k / 41;
            const EntryRegions regions = entry_regions(p, r);
            REQUIRE_FALSE(regions.accommodation_empty);
            CHECK(std::abs(entrant_gross_profit(p, regions.x_low) - r) <= 1e-9);
            CHECK(regions.x_low <= d.x_entrant_peak + 1e-12);
            if (regions.x_high) {
                CHECK(std::abs(entrant_gross_profit(p, *regions.x_high) - r) <= 1e-9);
                if (r > crossover_level)
                    CHECK(*regions.x_high <= d.x_crossover + 1e-9);
                else
                    CHECK(*regions.x_high >= d.x_crossover - 1e-9);
            } else {
                CHECK(p.phi <= p.eq_tol);
            }
        }
    }
}

TEST_CASE("membership and the entry decision tell the same story") {
    testutil::Sampler sampler(1618033);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p = sampler.draw();
        const DerivedConstants d = derived_constants(p);
        for (const double frac : {0.13, 0.47, 0.81}) {
            const double r = d.entrant_max_profit * frac;
            const EntryRegions regions = entry_regions(p, r);
            for (int i = 0; i <= 100; ++i) {
                const double x = p.x_cap() * i / 100;
                const bool enters = entry_decision(p, x, r) == EntryDecision::Enter;
                CHECK(enters == regions.in_accommodation(x));
                CHECK(enters == !regions.in_deterrence(x));
            }
        }
    }
}

TEST_CASE("costs at or above the peak close the accommodation region") {
    testutil::Sampler sampler(97531);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p = sampler.draw();
        const DerivedConstants d = derived_constants(p);
        CHECK(entry_regions(p, d.entrant_max_profit * 1.0000001).accommodation_empty);
        CHECK(entry_regions(p, d.entrant_max_profit * 2).accommodation_empty);
    }
}
