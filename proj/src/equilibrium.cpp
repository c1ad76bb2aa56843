#include "detergame/equilibrium.hpp"

#include <algorithm>
#include <stdexcept>

namespace detergame {

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::Blockaded: return "Blockaded";
        case Regime::Deterred: return "Deterred";
        case Regime::Accommodated: return "Accommodated";
        case Regime::GenericNoEntry: return "GenericNoEntry";
        case Regime::GenericIndifferent: return "GenericIndifferent";
    }
    return "?";
}

Optimum accommodation_optimum(const ModelParams& p, double entry_cost) {
    require_valid(p);
    if (p.generic_entrant())
        throw std::domain_error("accommodation optimum undefined for theta == phi");
    const EntryRegions regions = entry_regions(p, entry_cost);
    if (regions.accommodation_empty)
        throw std::domain_error(
            "accommodation region empty: entry cost exceeds the rival's best gross profit");
    const double x_s = derived_constants(p).x_static;
    if (regions.in_accommodation(x_s))
        return {x_s, period1_profit(p, x_s), true};
    // The single-period optimum falls outside the open interval. First-period
    // profit is strictly concave, so the supremum sits at the nearer endpoint
    // and is not attained inside.
    const double edge = x_s <= regions.x_low ? regions.x_low : *regions.x_high;
    return {edge, period1_profit(p, edge), false};
}

Optimum deterrence_optimum(const ModelParams& p, double entry_cost) {
    require_valid(p);
    if (p.generic_entrant())
        throw std::domain_error("deterrence optimum undefined for theta == phi");
    require_nonnegative(entry_cost, "entry cost");
    const DerivedConstants d = derived_constants(p);
    if (entry_cost >= d.blockade_threshold - p.profit_tie_tol())
        return {d.x_monopoly, two_period_monopoly_profit(p, d.x_monopoly), true};
    // The unconstrained optimum would invite entry, so the best deterring
    // output is the lower region boundary: deterrence from below costs less
    // first-period profit than overshooting to the upper boundary.
    const EntryRegions regions = entry_regions(p, entry_cost);
    return {regions.x_low, two_period_monopoly_profit(p, regions.x_low), true};
}

AdvantageResult profit_advantage(const ModelParams& p, double entry_cost) {
    const Optimum det = deterrence_optimum(p, entry_cost);
    const EntryRegions regions = entry_regions(p, entry_cost);
    if (regions.accommodation_empty) return {det.value, true};
    const Optimum acc = accommodation_optimum(p, entry_cost);
    return {det.value - acc.value, false};
}

EquilibriumOutcome solve(const ModelParams& p, double entry_cost) {
    require_valid(p);
    require_nonnegative(entry_cost, "entry cost");
    const DerivedConstants d = derived_constants(p);
    const double tie = p.profit_tie_tol();
    EquilibriumOutcome out{};

    auto fill_no_entry = [&](double x) {
        out.x_star = x;
        out.entry = false;
        out.profit_period1 = period1_profit(p, x);
        out.profit_period2 = monopoly_second_period_profit(p, x);
        out.total = out.profit_period1 + out.profit_period2;
        const double intercept = p.alpha - p.theta * x;
        MonopolyPricing mp;
        mp.price = (intercept + p.c) / 2;
        mp.quantity = std::max(0.0, intercept - p.c) / (2 * p.beta);
        mp.profit = out.profit_period2;
        out.monopoly = mp;
    };

    if (p.generic_entrant()) {
        out.regime = entry_cost > tie ? Regime::GenericNoEntry : Regime::GenericIndifferent;
        fill_no_entry(d.x_monopoly);
        if (out.regime == Regime::GenericIndifferent) {
            out.indifferent = true;
            out.x_alternative = d.x_static;  // the optimum if entry were predicted instead
        }
        return out;
    }

    const AdvantageResult adv = profit_advantage(p, entry_cost);
    out.advantage = adv.value;
    out.pi_deterrence = deterrence_optimum(p, entry_cost).value;
    if (!adv.accommodation_empty) {
        const Optimum acc = accommodation_optimum(p, entry_cost);
        out.pi_accommodation = acc.value;
        out.accommodation_sup_only = !acc.attained;
    }

    if (entry_cost <= tie) {
        // Costless entry: deterring earns exactly as much as accommodating,
        // and the tie resolves toward letting the rival in.
        out.regime = Regime::Accommodated;
        out.indifferent = true;
        out.x_star = d.x_static;
        out.entry = true;
        out.duopoly = price_equilibrium(p, out.x_star);
        out.profit_period1 = period1_profit(p, out.x_star);
        out.profit_period2 = 0.0;
        out.total = out.profit_period1;
        return out;
    }
    if (entry_cost >= d.blockade_threshold - tie) {
        out.regime = Regime::Blockaded;
        fill_no_entry(d.x_monopoly);
        return out;
    }
    out.regime = Regime::Deterred;
    fill_no_entry(entry_regions(p, entry_cost).x_low);
    return out;
}

}  // namespace detergame
