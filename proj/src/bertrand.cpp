#include "detergame/bertrand.hpp"

#include <algorithm>

namespace detergame {

const char* to_string(PricingRegime regime) {
    switch (regime) {
        case PricingRegime::GenericMarginalCost: return "GenericMarginalCost";
        case PricingRegime::LimitPricing: return "LimitPricing";
        case PricingRegime::EntrantMonopolyPricing: return "EntrantMonopolyPricing";
    }
    return "?";
}

double effectiveness_gap(const ModelParams& p, double x) {
    require_nonnegative(x, "first-period output");
    return (p.theta - p.phi) * x;
}

PricingOutcome price_equilibrium(const ModelParams& p, double x) {
    require_valid(p);
    PricingOutcome out{};
    out.gap = effectiveness_gap(p, x);
    out.profit_incumbent = 0.0;
    out.entrant_market_exhausted = false;

    if (p.generic_entrant() || x == 0.0) {
        // Homogeneous products: classic marginal-cost pricing, zero profits.
        // The market splits evenly by convention.
        out.regime = PricingRegime::GenericMarginalCost;
        out.p_incumbent = out.p_entrant = p.c;
        const double q_total = std::max(0.0, p.alpha - p.theta * x - p.c) / p.beta;
        out.q_incumbent = out.q_entrant = q_total / 2;
        out.profit_entrant = 0.0;
        return out;
    }

    // With a strict quality edge the rival always takes the whole market; the
    // incumbent's only undominated offer is its cost floor, and it sells
    // nothing.
    out.p_incumbent = p.c;
    out.q_incumbent = 0.0;
    const double entrant_intercept = p.alpha - p.phi * x;
    if (entrant_intercept <= p.c) {
        out.regime = PricingRegime::EntrantMonopolyPricing;
        out.entrant_market_exhausted = true;
        out.p_entrant = p.c;
        out.q_entrant = 0.0;
        out.profit_entrant = 0.0;
        return out;
    }

    const double x_crossover = p.markup() / (2 * p.theta - p.phi);
    if (x < x_crossover) {
        // The binding constraint is the incumbent's threat to undercut: the
        // rival charges the highest price the incumbent cannot profitably
        // match, cost plus the quality edge.
        out.regime = PricingRegime::LimitPricing;
        out.p_entrant = p.c + out.gap;
    } else {
        // The edge is so large the rival's unconstrained monopoly price is
        // already uncuttable.
        out.regime = PricingRegime::EntrantMonopolyPricing;
        out.p_entrant = (entrant_intercept + p.c) / 2;
    }
    out.q_entrant = std::max(0.0, (entrant_intercept - out.p_entrant) / p.beta);
    out.profit_entrant = (out.p_entrant - p.c) * out.q_entrant;
    return out;
}

}  // namespace detergame
