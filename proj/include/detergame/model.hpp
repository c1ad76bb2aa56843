#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace detergame {

/// Market primitives for the two-period pricing game.
///
/// First-period inverse demand is P(X) = alpha - beta*X. Selling X units in
/// the first period erodes second-period willingness to pay: the incumbent's
/// own product loses theta per unit sold, a rival's product loses phi per
/// unit. Both firms produce at constant marginal cost c.
struct ModelParams {
    double alpha = 0;  ///< demand intercept
    double beta = 0;   ///< demand slope, > 0
    double theta = 0;  ///< own-erosion rate, 0 < theta < 2*beta
    double phi = 0;    ///< cross-erosion rate, 0 <= phi <= theta
    double c = 0;      ///< marginal cost, 0 <= c < alpha

    /// Absolute tolerance for knife-edge equality tests (theta == phi,
    /// degenerate region roots). Configurable per instance.
    double eq_tol = 1e-12;

    double markup() const { return alpha - c; }

    /// Largest meaningful first-period output: beyond alpha/beta the
    /// first-period price is negative.
    double x_cap() const { return alpha / beta; }

    /// Reference profit magnitude, used to scale profit-valued tolerances.
    double profit_scale() const { return markup() * markup() / beta; }

    /// Tolerance for profit ties (entry indifference, regime boundaries).
    double profit_tie_tol() const {
        return eq_tol * std::max(1.0, profit_scale());
    }

    /// True when the rival's product is eroded as fast as the incumbent's,
    /// leaving it no quality edge at any output level.
    bool generic_entrant() const { return theta - phi <= eq_tol; }
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every parameter restriction and reports all violations, not just
/// the first one.
ValidationResult validate(const ModelParams& params);

/// Throws std::invalid_argument listing every violation when params fail
/// validate().
void require_valid(const ModelParams& params);

/// Throws std::domain_error when value is negative or not finite.
void require_nonnegative(double value, const char* what);

/// First-period profit (alpha - c - beta*X) * X.
double period1_profit(const ModelParams& params, double x);

/// Second-period profit of an unchallenged monopolist,
/// (alpha - c - theta*X)^2 / (4*beta).
double monopoly_second_period_profit(const ModelParams& params, double x);

/// Two-period total under no entry: period1_profit + the monopoly
/// second-period profit. Strictly concave in X for valid parameters.
double two_period_monopoly_profit(const ModelParams& params, double x);

/// Landmark outputs and profit levels of the model.
struct DerivedConstants {
    double x_static;             ///< single-period optimum (alpha-c)/(2 beta)
    double x_monopoly;           ///< two-period monopoly optimum (alpha-c)/(2 beta + theta)
    double x_crossover;          ///< output where the limit price meets the rival's monopoly price
    double x_entrant_peak;       ///< output maximizing the rival's gross profit
    double entrant_max_profit;   ///< that maximal gross profit
    double blockade_threshold;   ///< entry cost at which the monopoly optimum deters by itself
};

/// Computes the landmarks. Throws on invalid parameters; the fully degenerate
/// theta = phi = 0 model gets its own message.
DerivedConstants derived_constants(const ModelParams& params);

}  // namespace detergame
