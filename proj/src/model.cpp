#include "detergame/model.hpp"

#include <cmath>
#include <stdexcept>

namespace detergame {

ValidationResult validate(const ModelParams& p) {
    ValidationResult result;
    auto fail = [&result](const char* msg) { result.violations.emplace_back(msg); };
    if (!(std::isfinite(p.alpha) && std::isfinite(p.beta) && std::isfinite(p.theta) &&
          std::isfinite(p.phi) && std::isfinite(p.c)))
        fail("all parameters must be finite");
    if (!(p.beta > 0)) fail("beta > 0 (downward-sloping demand)");
    if (!(p.c >= 0)) fail("c >= 0 (nonnegative marginal cost)");
    if (!(p.alpha > p.c)) fail("alpha > c (positive market size)");
    if (!(p.theta > 0 && p.theta < 2 * p.beta))
        fail("erosion bound: 0 < theta < 2*beta (first-period sales stay profitable)");
    if (!(p.phi >= 0 && p.theta >= p.phi))
        fail("erosion ordering: theta >= phi >= 0 (own product erodes at least as fast)");
    if (!(p.eq_tol > 0 && std::isfinite(p.eq_tol))) fail("eq_tol > 0");
    return result;
}

void require_valid(const ModelParams& p) {
    const ValidationResult result = validate(p);
    if (result.ok()) return;
    std::string message = "invalid model parameters:";
    for (const std::string& v : result.violations) {
        message += ' ';
        message += v;
        message += ';';
    }
    message.pop_back();
    throw std::invalid_argument(message);
}

void require_nonnegative(double value, const char* what) {
    if (!(value >= 0) || !std::isfinite(value))
        throw std::domain_error(std::string(what) + " must be finite and nonnegative");
}

double period1_profit(const ModelParams& p, double x) {
    require_nonnegative(x, "first-period output");
    return (p.alpha - p.c - p.beta * x) * x;
}

double monopoly_second_period_profit(const ModelParams& p, double x) {
    require_nonnegative(x, "first-period output");
    const double margin = p.alpha - p.c - p.theta * x;
    return margin * margin / (4 * p.beta);
}

double two_period_monopoly_profit(const ModelParams& p, double x) {
    return period1_profit(p, x) + monopoly_second_period_profit(p, x);
}

DerivedConstants derived_constants(const ModelParams& p) {
    if (p.theta <= p.eq_tol && p.phi >= 0 && p.phi <= p.eq_tol && p.theta >= 0)
        throw std::invalid_argument(
            "degenerate model: theta = phi = 0 leaves no erosion dynamics");
    require_valid(p);
    const double m = p.markup();
    DerivedConstants d;
    d.x_static = m / (2 * p.beta);
    d.x_monopoly = m / (2 * p.beta + p.theta);
    d.x_crossover = m / (2 * p.theta - p.phi);
    d.x_entrant_peak = m / (2 * p.theta);
    d.entrant_max_profit = (p.theta - p.phi) / p.theta * (m / 2) * (m / 2) / p.beta;
    d.blockade_threshold =
        2 * (p.theta - p.phi) * m * m / ((2 * p.beta + p.theta) * (2 * p.beta + p.theta));
    // Structural orderings; cannot fail once the parameters validate.
    if (!(d.x_monopoly < d.x_static) || !(d.x_monopoly < d.x_crossover) ||
        !(d.x_entrant_peak <= d.x_crossover))
        throw std::logic_error("derived landmark ordering violated");
    return d;
}

}  // namespace detergame
