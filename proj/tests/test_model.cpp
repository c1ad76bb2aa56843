#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "detergame/model.hpp"
#include "test_support.hpp"

using namespace detergame;
using testutil::reference_params;

TEST_CASE("validate accepts the reference parameters") {
    CHECK(validate(reference_params()).ok());
}

TEST_CASE("validate reports every violated restriction by name") {
    ModelParams p = reference_params();
    p.beta = 1;
    p.theta = 3;  // erosion bound broken: theta >= 2*beta
    const ValidationResult r = validate(p);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations.size() == 1);
    CHECK(r.violations[0].find("theta < 2*beta") != std::string::npos);

    ModelParams q = reference_params();
    q.theta = 1;
    q.phi = 1.5;  // ordering broken: phi > theta
    const ValidationResult rq = validate(q);
    REQUIRE_FALSE(rq.ok());
    CHECK(rq.violations.size() == 1);
    CHECK(rq.violations[0].find("theta >= phi") != std::string::npos);

    ModelParams z = reference_params();
    z.alpha = 2;  // market size zero: alpha == c
    CHECK_FALSE(validate(z).ok());
    CHECK_THROWS_AS(require_valid(z), std::invalid_argument);

    ModelParams multi{-1, -1, -1, -1, -1};
    CHECK(validate(multi).violations.size() >= 4);  // all violations, not just the first
}

TEST_CASE("first-period profit") {
    const ModelParams p = reference_params();
    CHECK(period1_profit(p, 2) == doctest::Approx(8).epsilon(1e-12));
    CHECK(period1_profit(p, 0) == 0.0);
    CHECK(period1_profit(p, 3.35) == doctest::Approx(4.355).epsilon(1e-12));
    CHECK_THROWS_AS(period1_profit(p, -0.1), std::domain_error);
}

TEST_CASE("second-period monopoly profit") {
    const ModelParams p = reference_params();
    CHECK(monopoly_second_period_profit(p, 0) == doctest::Approx(8).epsilon(1e-12));
    CHECK(monopoly_second_period_profit(p, 4) == doctest::Approx(0).epsilon(1e-12));
    CHECK(monopoly_second_period_profit(p, 4.0 / 3) ==
          doctest::Approx(32.0 / 9).epsilon(1e-12));
    for (double x : {0.0, 0.7, 2.0, 4.0, 4.9})
        CHECK(monopoly_second_period_profit(p, x) >= 0.0);
}

TEST_CASE("two-period monopoly profit and its optimum") {
    const ModelParams p = reference_params();
    CHECK(two_period_monopoly_profit(p, 4.0 / 3) == doctest::Approx(32.0 / 3).epsilon(1e-12));
    CHECK(two_period_monopoly_profit(p, 1.1835) ==
          doctest::Approx(10.632991625).epsilon(1e-9));
}

TEST_CASE("derived landmarks at the reference parameters") {
    const DerivedConstants d = derived_constants(reference_params());
    CHECK(d.x_static == doctest::Approx(2).epsilon(1e-12));
    CHECK(d.x_monopoly == doctest::Approx(4.0 / 3).epsilon(1e-12));
    CHECK(d.x_crossover == doctest::Approx(16.0 / 7).epsilon(1e-12));
    CHECK(d.x_entrant_peak == doctest::Approx(2).epsilon(1e-12));
    CHECK(d.entrant_max_profit == doctest::Approx(6).epsilon(1e-12));
    CHECK(d.blockade_threshold == doctest::Approx(16.0 / 3).epsilon(1e-12));
}

TEST_CASE("derived landmarks reject degenerate and invalid parameters") {
    ModelParams degenerate = reference_params();
    degenerate.theta = 0;
    degenerate.phi = 0;
    CHECK_THROWS_WITH_AS(derived_constants(degenerate),
                         doctest::Contains("theta = phi = 0"), std::invalid_argument);
    ModelParams bad = reference_params();
    bad.beta = 0;
    CHECK_THROWS_AS(derived_constants(bad), std::invalid_argument);
}

TEST_CASE("two-period profit is concave with the interior optimum at x_monopoly") {
    // Independent verification: a fine grid argmax must land next to the
    // closed-form optimum, and the discrete second difference must stay
    // negative, for a spread of random parameter draws.
    testutil::Sampler sampler(20260816);
    for (int trial = 0; trial < 1000; ++trial) {
        const ModelParams p = sampler.draw(trial % 2 == 0);
        const DerivedConstants d = derived_constants(p);
        const double h = p.x_cap() / 1000;
        double best_x = 0, best_v = -1e300;
        double prev = 0, prev2 = 0;
        for (int i = 0; i <= 1000; ++i) {
            const double x = i * h;
            const double v = two_period_monopoly_profit(p, x);
            if (v > best_v) {
                best_v = v;
                best_x = x;
            }
            if (i >= 2) CHECK(v - 2 * prev + prev2 < 0);
            prev2 = prev;
            prev = v;
        }
        CHECK(std::abs(best_x - d.x_monopoly) <= h);
        // conservation ordering and crossover ordering hold on every draw
        CHECK(d.x_monopoly < d.x_static);
        CHECK(d.x_monopoly < d.x_crossover);
    }
}

TEST_CASE("first-period profit peaks at x_static") {
    testutil::Sampler sampler(7051);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p = sampler.draw();
        const DerivedConstants d = derived_constants(p);
        const double h = p.x_cap() / 1000;
        double best_x = 0, best_v = -1e300;
        for (int i = 0; i <= 1000; ++i) {
            const double x = i * h;
            const double v = period1_profit(p, x);
            if (v > best_v) {
                best_v = v;
                best_x = x;
            }
        }
        CHECK(std::abs(best_x - d.x_static) <= h);
    }
}
