#pragma once

#include "detergame/model.hpp"

namespace detergame {

enum class PricingRegime {
    GenericMarginalCost,    ///< no quality edge: both firms price at cost
    LimitPricing,           ///< rival takes the market at the highest uncuttable price
    EntrantMonopolyPricing  ///< quality edge so large the rival prices as a monopolist
};

const char* to_string(PricingRegime regime);

/// Second-period price competition outcome for a given first-period output.
struct PricingOutcome {
    PricingRegime regime;
    double p_incumbent;
    double p_entrant;
    double q_incumbent;
    double q_entrant;
    double profit_incumbent;  ///< zero in every regime
    double profit_entrant;
    double gap;               ///< quality edge (theta - phi) * X
    /// True when first-period sales eroded even the rival's demand below cost
    /// (alpha - phi*X <= c): no sale happens at any price >= c.
    bool entrant_market_exhausted;
};

/// Quality edge the rival enjoys after first-period output x.
double effectiveness_gap(const ModelParams& params, double x);

/// Unique Nash equilibrium of the second-period price game, given that both
/// firms are in the market. Ties in consumer choice go to the rival, and
/// neither firm prices below cost.
PricingOutcome price_equilibrium(const ModelParams& params, double x);

}  // namespace detergame
