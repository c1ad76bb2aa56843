#pragma once

#include <optional>

#include "detergame/bertrand.hpp"
#include "detergame/entry.hpp"
#include "detergame/model.hpp"

namespace detergame {

enum class Regime {
    Blockaded,          ///< monopoly optimum already deters entry
    Deterred,           ///< output is distorted down to the deterrence boundary
    Accommodated,       ///< entry happens (only at zero entry cost)
    GenericNoEntry,     ///< theta == phi, positive cost: rival never recoups it
    GenericIndifferent  ///< theta == phi, zero cost: rival earns zero either way
};

const char* to_string(Regime regime);

struct Optimum {
    double x;
    double value;
    /// False when the best value is a supremum at an open boundary of the
    /// accommodation interval and is not attained inside it.
    bool attained;
};

struct AdvantageResult {
    double value;
    /// True when no output induces entry: there is nothing to accommodate and
    /// value is the full deterrence optimum.
    bool accommodation_empty;
};

/// Second-period pricing record when no entry occurred.
struct MonopolyPricing {
    double price;
    double quantity;
    double profit;
};

struct EquilibriumOutcome {
    Regime regime;
    double x_star;
    bool entry;
    double profit_period1;
    double profit_period2;  ///< incumbent's second-period profit
    double total;           ///< incumbent's two-period payoff
    std::optional<PricingOutcome> duopoly;    ///< set when entry occurs
    std::optional<MonopolyPricing> monopoly;  ///< set when it does not
    std::optional<double> pi_accommodation;   ///< empty when no output induces entry
    bool accommodation_sup_only = false;      ///< pi_accommodation is a supremum, not attained
    std::optional<double> pi_deterrence;
    std::optional<double> advantage;          ///< pi_deterrence - pi_accommodation
    std::optional<double> x_alternative;      ///< zero-cost generic tie: the entry-side candidate
    bool indifferent = false;                 ///< zero entry cost: both strategies pay the same
};

/// Best payoff over the open accommodation interval (entry happens, no
/// second-period profit). When the single-period optimum falls outside the
/// interval the supremum sits at an endpoint and is flagged as not attained.
/// Throws std::domain_error when the interval is empty or theta == phi.
Optimum accommodation_optimum(const ModelParams& params, double entry_cost);

/// Best payoff over the closed deterrence region: the unconstrained monopoly
/// optimum when it already deters, otherwise the lower boundary x_low.
Optimum deterrence_optimum(const ModelParams& params, double entry_cost);

/// Deterrence-minus-accommodation payoff gap. Nonnegative for every valid
/// parameter set and entry cost.
AdvantageResult profit_advantage(const ModelParams& params, double entry_cost);

/// Subgame perfect equilibrium of the full two-period game by backward
/// induction. Zero entry cost resolves the payoff tie toward accommodation;
/// the boundary cost between deterrence and blockade resolves to Blockaded.
EquilibriumOutcome solve(const ModelParams& params, double entry_cost);

}  // namespace detergame
