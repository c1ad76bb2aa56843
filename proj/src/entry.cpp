#include "detergame/entry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace detergame {

const char* to_string(EntryDecision decision) {
    switch (decision) {
        case EntryDecision::Enter: return "Enter";
        case EntryDecision::StayOut: return "StayOut";
        case EntryDecision::Indifferent: return "Indifferent";
    }
    return "?";
}

double entrant_gross_profit(const ModelParams& p, double x) {
    require_nonnegative(x, "first-period output");
    if (p.generic_entrant() || x == 0.0) return 0.0;
    const double m = p.markup();
    const double x_crossover = m / (2 * p.theta - p.phi);
    if (x < x_crossover)
        return (p.theta - p.phi) * x * (m - p.theta * x) / p.beta;
    // Monopoly-pricing branch, floored at zero once the rival's demand
    // intercept falls below cost.
    const double margin = std::max(0.0, m - p.phi * x);
    return margin * margin / (4 * p.beta);
}

EntrantPeak entrant_profit_peak(const ModelParams& p) {
    require_valid(p);
    if (p.generic_entrant())
        throw std::domain_error(
            "rival profit peak undefined: theta == phi leaves no rent at any output");
    const DerivedConstants d = derived_constants(p);
    EntrantPeak peak;
    peak.plateau = p.phi <= p.eq_tol;
    // For phi == 0 the falling branch is flat, so the plateau starts at the
    // branch point; otherwise the peak is interior to the rising branch.
    peak.x_peak = peak.plateau ? d.x_crossover : d.x_entrant_peak;
    peak.max_profit = d.entrant_max_profit;
    return peak;
}

EntryRegions entry_regions(const ModelParams& p, double entry_cost) {
    require_valid(p);
    require_nonnegative(entry_cost, "entry cost");
    if (p.generic_entrant())
        throw std::domain_error(
            "entry regions undefined: theta == phi means entry never recoups a positive cost");
    const double m = p.markup();
    const DerivedConstants d = derived_constants(p);
    EntryRegions regions;
    regions.entry_cost = entry_cost;
    if (p.phi > p.eq_tol) regions.exhaustion_point = m / p.phi;
    if (entry_cost > d.entrant_max_profit) {
        regions.accommodation_empty = true;
        return regions;
    }

    // Rising-branch roots of theta*(theta-phi)*X^2 - (theta-phi)*m*X
    // + beta*R = 0, written so the small root suffers no cancellation as
    // R -> 0.
    const double g = p.theta - p.phi;
    const double qa = p.theta * g;
    const double qb = g * m;
    const double disc = qb * qb - 4 * qa * p.beta * entry_cost;
    if (disc < 0) {  // cost numerically above the peak
        regions.accommodation_empty = true;
        return regions;
    }
    const double qq = (qb + std::sqrt(disc)) / 2;
    regions.x_low = p.beta * entry_cost / qq;
    const double upper_rising = qq / qa;
    if (upper_rising - regions.x_low <= 1e-12) {
        // Double root at the peak: no interior interval survives.
        regions.accommodation_empty = true;
        return regions;
    }

    // Upper boundary: still on the rising branch when the cost exceeds the
    // profit level at the pricing crossover, otherwise on the falling branch.
    const double crossover_margin = m - p.phi * d.x_crossover;
    const double crossover_level = crossover_margin * crossover_margin / (4 * p.beta);
    if (entry_cost > crossover_level)
        regions.x_high = upper_rising;
    else if (p.phi > p.eq_tol)
        regions.x_high = (m - 2 * std::sqrt(p.beta * entry_cost)) / p.phi;
    // phi == 0 with cost below the plateau: profitable entry at every large x.
    return regions;
}

EntryDecision entry_decision(const ModelParams& p, double x, double entry_cost) {
    require_valid(p);
    require_nonnegative(x, "first-period output");
    require_nonnegative(entry_cost, "entry cost");
    const double tie = p.profit_tie_tol();
    if (p.generic_entrant())
        return entry_cost > tie ? EntryDecision::StayOut : EntryDecision::Indifferent;
    return entrant_gross_profit(p, x) - entry_cost > tie ? EntryDecision::Enter
                                                         : EntryDecision::StayOut;
}

}  // namespace detergame
