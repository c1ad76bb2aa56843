#pragma once

#include "detergame/equilibrium.hpp"
#include "detergame/model.hpp"

namespace detergame {

/// Discretization used by the brute-force checks. Non-positive fields select
/// the defaults; non-finite or otherwise degenerate grids are rejected when
/// resolved.
struct GridSpec {
    double price_step = 0;   ///< default 1e-3 * (alpha - c)
    double output_step = 0;  ///< default 1e-3 * x_cap
    double x_max = 0;        ///< default x_cap
};

GridSpec resolve_grid(const ModelParams& params, const GridSpec& spec = {});

struct OracleReport {
    double closed_form_value;
    double brute_force_value;
    double discrepancy;
    double tolerance_used;
    bool pass;
};

/// Result of replaying the second-period price game by enumeration.
struct SubgameCheck {
    OracleReport entrant;          ///< rival's best profit, grid vs closed form
    double incumbent_best_profit;  ///< brute-force incumbent best response; must be exactly zero
    double best_price;             ///< rival price attaining the grid maximum
    bool pass;
};

/// Result of replaying the full game on an output grid.
struct SpneCheck {
    OracleReport value;  ///< incumbent equilibrium payoff, grid vs closed form
    double x_closed;
    double x_brute;
    double x_tolerance;
    Regime regime_closed;
    Regime regime_brute;
    bool regime_match;
    bool x_match;
    bool pass;
};

/// Replays the second-period price game at output x by enumerating rival
/// prices on a grid, awarding the market to the rival whenever its price
/// premium is within the quality edge, and compares the maximum against
/// entrant_gross_profit. Also verifies by enumeration that the incumbent has
/// no profitable response. Rebuilt from the demand primitives only; reusing
/// the closed-form pricing logic here would make the comparison circular.
SubgameCheck oracle_subgame_profit(const ModelParams& params, double x,
                                   const GridSpec& spec = {});

/// Replays the full game: for each candidate first-period output, decides
/// entry by comparing the rival's primitive best-response profit with the
/// entry cost, then maximizes the incumbent payoff. Candidates are the
/// uniform grid plus the smooth-piece optima and the entry-boundary points
/// (bisected on the primitive profit, since a plain grid cannot land on the
/// boundary of a strict-inequality region). Compares regime, maximizer, and
/// value against solve().
SpneCheck oracle_spne(const ModelParams& params, double entry_cost,
                      const GridSpec& spec = {});

}  // namespace detergame
