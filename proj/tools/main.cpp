#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "detergame/entry.hpp"
#include "detergame/equilibrium.hpp"
#include "detergame/model.hpp"
#include "detergame/oracle.hpp"
#include "detergame/report.hpp"

namespace {

using namespace detergame;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitOracle = 3;

struct Options {
    ModelParams params{10, 2, 2, 0.5, 2};
    double entry_cost = 5;
    std::string entry_cost_range;
    std::string sweep_phi;
    std::string sweep_theta;
    std::string format;  // empty: text for solve, csv otherwise
    std::string out_path;
    double price_step = 0;
    double output_step = 0;
    std::string config_path;
};

double parse_number(const std::string& key, const std::string& text) {
    size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != text.size() || text.empty())
        throw std::invalid_argument("config value for '" + key + "' is not a number: '" +
                                    text + "'");
    return value;
}

// Config supplies only the settings the command line left untouched.
void merge_config(const CLI::App& app, Options& opt) {
    if (opt.config_path.empty()) return;
    const auto kv = parse_config_file(opt.config_path);
    auto unset = [&app](const char* flag) { return app.get_option(flag)->count() == 0; };
    for (const auto& [key, value] : kv) {
        if (key == "alpha" && unset("--alpha")) opt.params.alpha = parse_number(key, value);
        else if (key == "beta" && unset("--beta")) opt.params.beta = parse_number(key, value);
        else if (key == "theta" && unset("--theta")) opt.params.theta = parse_number(key, value);
        else if (key == "phi" && unset("--phi")) opt.params.phi = parse_number(key, value);
        else if (key == "cost" && unset("--cost")) opt.params.c = parse_number(key, value);
        else if (key == "entry_cost" && unset("--entry-cost")) opt.entry_cost = parse_number(key, value);
        else if (key == "entry_cost_range" && unset("--entry-cost-range")) opt.entry_cost_range = value;
        else if (key == "sweep_phi" && unset("--sweep-phi")) opt.sweep_phi = value;
        else if (key == "sweep_theta" && unset("--sweep-theta")) opt.sweep_theta = value;
        else if (key == "format" && unset("--format")) opt.format = value;
        else if (key == "out" && unset("--out")) opt.out_path = value;
        else if (key == "price_step" && unset("--price-step")) {
            opt.price_step = parse_number(key, value);
            if (!(opt.price_step > 0))
                throw std::invalid_argument("price_step must be positive");
        } else if (key == "output_step" && unset("--output-step")) {
            opt.output_step = parse_number(key, value);
            if (!(opt.output_step > 0))
                throw std::invalid_argument("output_step must be positive");
        }
        else if (key == "alpha" || key == "beta" || key == "theta" || key == "phi" ||
                 key == "cost" || key == "entry_cost" || key == "entry_cost_range" ||
                 key == "sweep_phi" || key == "sweep_theta" || key == "format" ||
                 key == "out" || key == "price_step" || key == "output_step") {
            // command line wins; ignore the config copy
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

void check_options(const Options& opt) {
    if (!opt.format.empty() && opt.format != "csv" && opt.format != "jsonl")
        throw std::invalid_argument("--format must be csv or jsonl, got '" + opt.format + "'");
    if (opt.price_step < 0)
        throw std::invalid_argument("--price-step must be positive");
    if (opt.output_step < 0)
        throw std::invalid_argument("--output-step must be positive");
}

struct OutputStream {
    std::ofstream file;
    std::ostream* stream = &std::cout;
    explicit OutputStream(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
        stream = &file;
    }
    std::ostream& operator*() { return *stream; }
};

int cmd_solve(const Options& opt) {
    const EquilibriumOutcome outcome = solve(opt.params, opt.entry_cost);
    OutputStream out(opt.out_path);
    if (opt.format == "jsonl") {
        *out << solve_record_json(opt.params, opt.entry_cost, outcome) << '\n';
    } else if (opt.format == "csv") {
        *out << kSweepCsvHeader << '\n'
             << sweep_csv_row(opt.params, opt.entry_cost, outcome) << '\n';
    } else {
        *out << solve_record_text(opt.params, opt.entry_cost, outcome);
    }
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    if (!opt.sweep_phi.empty() && !opt.sweep_theta.empty())
        throw std::invalid_argument("--sweep-phi and --sweep-theta are mutually exclusive");
    std::vector<double> costs;
    if (!opt.entry_cost_range.empty())
        costs = parse_range(opt.entry_cost_range).values();
    else
        costs.push_back(opt.entry_cost);

    enum class Axis { None, Phi, Theta };
    Axis axis = Axis::None;
    std::vector<double> axis_values{0};
    if (!opt.sweep_phi.empty()) {
        axis = Axis::Phi;
        axis_values = parse_range(opt.sweep_phi).values();
    } else if (!opt.sweep_theta.empty()) {
        axis = Axis::Theta;
        axis_values = parse_range(opt.sweep_theta).values();
    }

    // Rows are emitted in deterministic axis-major order. Every row is a pure
    // function of its inputs, so the loop could be parallelized without
    // changing the output.
    std::string body;
    for (const double a : axis_values) {
        ModelParams p = opt.params;
        if (axis == Axis::Phi) p.phi = a;
        if (axis == Axis::Theta) p.theta = a;
        for (const double r : costs) {
            const EquilibriumOutcome outcome = solve(p, r);
            body += opt.format == "jsonl" ? solve_record_json(p, r, outcome)
                                          : sweep_csv_row(p, r, outcome);
            body += '\n';
        }
    }
    OutputStream out(opt.out_path);
    if (opt.format != "jsonl") *out << kSweepCsvHeader << '\n';
    *out << body;
    return kExitOk;
}

int cmd_figure(const Options& opt) {
    const std::vector<FigureRecord> recs = figure_records(opt.params, opt.entry_cost);
    OutputStream out(opt.out_path);
    if (opt.format == "jsonl") {
        for (const FigureRecord& rec : recs) *out << figure_row_json(rec) << '\n';
    } else {
        *out << kFigureCsvHeader << '\n';
        for (const FigureRecord& rec : recs) *out << figure_row_csv(rec) << '\n';
    }
    return kExitOk;
}

int cmd_check(const Options& opt) {
    GridSpec spec;
    spec.price_step = opt.price_step;
    spec.output_step = opt.output_step;
    const GridSpec grid = resolve_grid(opt.params, spec);
    const DerivedConstants d = derived_constants(opt.params);
    OutputStream out(opt.out_path);

    int failures = 0;
    std::string first_failure;
    auto record = [&](const std::string& line, bool pass) {
        *out << line << (pass ? "  PASS" : "  FAIL") << '\n';
        if (!pass && first_failure.empty()) first_failure = line;
        failures += pass ? 0 : 1;
    };

    for (int i = 0; i <= 24; ++i) {
        const double x = grid.x_max * i / 24;
        const SubgameCheck check = oracle_subgame_profit(opt.params, x, spec);
        std::string line = "subgame x=" + format_g9(x);
        line += " closed=" + format_g9(check.entrant.closed_form_value);
        line += " brute=" + format_g9(check.entrant.brute_force_value);
        line += " disc=" + format_g9(check.entrant.discrepancy);
        line += " tol=" + format_g9(check.entrant.tolerance_used);
        line += " incumbent=" + format_g9(check.incumbent_best_profit);
        record(line, check.pass);
    }

    std::vector<double> costs;
    if (!opt.entry_cost_range.empty()) {
        costs = parse_range(opt.entry_cost_range).values();
    } else {
        for (int i = 0; i <= 24; ++i) costs.push_back(1.2 * d.entrant_max_profit * i / 24);
        costs.push_back(d.blockade_threshold);
        costs.push_back(d.entrant_max_profit);
        std::sort(costs.begin(), costs.end());
        costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
    }
    for (const double r : costs) {
        const SpneCheck check = oracle_spne(opt.params, r, spec);
        std::string line = "spne R=" + format_g9(r);
        line += std::string(" regime=") + to_string(check.regime_closed) + "/" +
                to_string(check.regime_brute);
        line += " x=" + format_g9(check.x_closed) + "/" + format_g9(check.x_brute);
        line += " value_disc=" + format_g9(check.value.discrepancy);
        line += " tol=" + format_g9(check.value.tolerance_used);
        record(line, check.pass);
    }

    *out << "checks: " << (failures == 0 ? "all pass" : std::to_string(failures) + " failed")
         << '\n';
    if (failures > 0) {
        std::cerr << "FIRST FAILURE: " << first_failure << '\n';
        return kExitOracle;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Two-period entry deterrence under second-period price competition"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--alpha", opt.params.alpha, "demand intercept")->capture_default_str();
    app.add_option("--beta", opt.params.beta, "demand slope")->capture_default_str();
    app.add_option("--theta", opt.params.theta, "own-erosion rate")->capture_default_str();
    app.add_option("--phi", opt.params.phi, "cross-erosion rate")->capture_default_str();
    app.add_option("--cost", opt.params.c, "marginal cost")->capture_default_str();
    app.add_option("--entry-cost", opt.entry_cost, "rival's fixed entry cost")
        ->capture_default_str();
    app.add_option("--entry-cost-range", opt.entry_cost_range,
                   "entry cost sweep LO:HI:STEP (inclusive)");
    app.add_option("--sweep-phi", opt.sweep_phi, "phi sweep LO:HI:STEP (sweep only)");
    app.add_option("--sweep-theta", opt.sweep_theta, "theta sweep LO:HI:STEP (sweep only)");
    app.add_option("--format", opt.format, "output format: csv or jsonl");
    app.add_option("--out", opt.out_path, "write output to this file instead of stdout");
    app.add_option("--price-step", opt.price_step, "brute-force price grid step");
    app.add_option("--output-step", opt.output_step, "brute-force output grid step");
    app.add_option("--config", opt.config_path,
                   "key=value config file; command-line flags win");

    CLI::App* solve_cmd = app.add_subcommand(
        "solve", "equilibrium regime and first-period output for one parameter set");
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "solve over an entry-cost range and an optional phi/theta axis");
    CLI::App* figure_cmd = app.add_subcommand(
        "figure", "payoff-curve and landmark data for the profit diagram");
    CLI::App* check_cmd = app.add_subcommand(
        "check", "brute-force verification of the closed forms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        merge_config(app, opt);
        if (app.get_option("--price-step")->count() > 0 && !(opt.price_step > 0))
            throw std::invalid_argument("--price-step must be positive");
        if (app.get_option("--output-step")->count() > 0 && !(opt.output_step > 0))
            throw std::invalid_argument("--output-step must be positive");
        check_options(opt);
        require_valid(opt.params);
        require_nonnegative(opt.entry_cost, "entry cost");
        if (solve_cmd->parsed()) return cmd_solve(opt);
        if (sweep_cmd->parsed()) return cmd_sweep(opt);
        if (figure_cmd->parsed()) return cmd_figure(opt);
        if (check_cmd->parsed()) return cmd_check(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
