#pragma once

#include <optional>

#include "detergame/model.hpp"

namespace detergame {

/// Location and height of the rival's gross profit maximum.
struct EntrantPeak {
    double x_peak;
    double max_profit;
    /// phi == 0: the profit is flat at max_profit for every x >= x_peak, so
    /// x_peak is only the smallest maximizer.
    bool plateau;
};

enum class EntryDecision { Enter, StayOut, Indifferent };

const char* to_string(EntryDecision decision);

/// Partition of the first-period output axis by the entry incentive at a
/// given entry cost. Accommodation is the open set where the rival's gross
/// profit strictly exceeds the cost; deterrence is its closed complement.
struct EntryRegions {
    double entry_cost = 0;
    bool accommodation_empty = false;
    double x_low = 0;                 ///< lower boundary (rising branch root)
    std::optional<double> x_high;     ///< upper boundary; empty = unbounded (phi == 0)
    /// For phi > 0, the output at which even the rival's demand is gone;
    /// everything beyond it deters as well.
    std::optional<double> exhaustion_point;

    bool in_accommodation(double x) const {
        if (accommodation_empty) return false;
        return x > x_low && (!x_high || x < *x_high);
    }
    bool in_deterrence(double x) const { return !in_accommodation(x); }
};

/// Gross second-period profit the rival would earn after entering, as a
/// function of first-period output. Piecewise: quadratic rising branch under
/// limit pricing, falling branch under rival monopoly pricing, floored at
/// zero once the rival's demand is exhausted. Continuously differentiable at
/// the branch point.
double entrant_gross_profit(const ModelParams& params, double x);

/// Peak of entrant_gross_profit. Throws std::domain_error for theta == phi
/// (the rival earns no rent anywhere, so there is no peak to speak of).
EntrantPeak entrant_profit_peak(const ModelParams& params);

/// Computes the accommodation interval (x_low, x_high) by solving
/// entrant_gross_profit(X) == entry_cost on each branch with a
/// cancellation-free quadratic formula. Throws std::domain_error for
/// theta == phi, where the partition is undefined.
EntryRegions entry_regions(const ModelParams& params, double entry_cost);

/// Entry decision at output x and the given entry cost. Profit ties (within
/// ModelParams::profit_tie_tol) resolve to StayOut, so the deterrence region
/// stays closed. For theta == phi: StayOut whenever the cost is positive,
/// Indifferent at zero cost.
EntryDecision entry_decision(const ModelParams& params, double x, double entry_cost);

}  // namespace detergame
