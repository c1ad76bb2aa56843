#include "detergame/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "detergame/entry.hpp"
#include "detergame/oracle.hpp"

namespace detergame {

std::string format_g9(double value) {
    if (value == 0.0) value = 0.0;  // strip the sign off negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

const char* kSweepCsvHeader =
    "alpha,beta,theta,phi,c,R,regime,x_star,entry,profit_p1,profit_p2,total,"
    "pi_A_star,pi_D_star,advantage";

namespace {

std::string opt_cell(const std::optional<double>& v) {
    return v ? format_g9(*v) : std::string();
}

std::string opt_json(const std::optional<double>& v) {
    return v ? format_g9(*v) : std::string("null");
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string sweep_csv_row(const ModelParams& p, double entry_cost,
                          const EquilibriumOutcome& out) {
    std::string row;
    row += format_g9(p.alpha);
    row += ',';
    row += format_g9(p.beta);
    row += ',';
    row += format_g9(p.theta);
    row += ',';
    row += format_g9(p.phi);
    row += ',';
    row += format_g9(p.c);
    row += ',';
    row += format_g9(entry_cost);
    row += ',';
    row += to_string(out.regime);
    row += ',';
    row += format_g9(out.x_star);
    row += ',';
    row += bool_str(out.entry);
    row += ',';
    row += format_g9(out.profit_period1);
    row += ',';
    row += format_g9(out.profit_period2);
    row += ',';
    row += format_g9(out.total);
    row += ',';
    row += opt_cell(out.pi_accommodation);
    row += ',';
    row += opt_cell(out.pi_deterrence);
    row += ',';
    row += opt_cell(out.advantage);
    return row;
}

std::string solve_record_json(const ModelParams& p, double entry_cost,
                              const EquilibriumOutcome& out) {
    const DerivedConstants d = derived_constants(p);
    std::string j = "{";
    auto num = [&j](const char* key, const std::string& value) {
        j += '"';
        j += key;
        j += "\":";
        j += value;
        j += ',';
    };
    auto str = [&j](const char* key, const char* value) {
        j += '"';
        j += key;
        j += "\":\"";
        j += value;
        j += "\",";
    };
    num("alpha", format_g9(p.alpha));
    num("beta", format_g9(p.beta));
    num("theta", format_g9(p.theta));
    num("phi", format_g9(p.phi));
    num("c", format_g9(p.c));
    num("R", format_g9(entry_cost));
    str("regime", to_string(out.regime));
    num("x_star", format_g9(out.x_star));
    num("entry", bool_str(out.entry));
    num("profit_p1", format_g9(out.profit_period1));
    num("profit_p2", format_g9(out.profit_period2));
    num("total", format_g9(out.total));
    num("pi_A_star", opt_json(out.pi_accommodation));
    num("pi_A_sup_only", bool_str(out.accommodation_sup_only));
    num("pi_D_star", opt_json(out.pi_deterrence));
    num("advantage", opt_json(out.advantage));
    num("indifferent", bool_str(out.indifferent));
    num("x_alternative", opt_json(out.x_alternative));
    if (out.entry && out.duopoly) {
        str("p2_regime", to_string(out.duopoly->regime));
        num("p2_price", format_g9(out.duopoly->p_entrant));
        num("p2_quantity", format_g9(out.duopoly->q_entrant));
    } else if (out.monopoly) {
        str("p2_regime", "MonopolyNoEntry");
        num("p2_price", format_g9(out.monopoly->price));
        num("p2_quantity", format_g9(out.monopoly->quantity));
    }
    num("x_static", format_g9(d.x_static));
    num("x_monopoly", format_g9(d.x_monopoly));
    num("x_crossover", format_g9(d.x_crossover));
    num("x_entrant_peak", format_g9(d.x_entrant_peak));
    num("entrant_max_profit", format_g9(d.entrant_max_profit));
    num("blockade_threshold", format_g9(d.blockade_threshold));
    j.back() = '}';
    return j;
}

SolveInput parse_solve_record(const std::string& json_line) {
    const nlohmann::json j = nlohmann::json::parse(json_line);
    SolveInput in;
    in.params.alpha = j.at("alpha").get<double>();
    in.params.beta = j.at("beta").get<double>();
    in.params.theta = j.at("theta").get<double>();
    in.params.phi = j.at("phi").get<double>();
    in.params.c = j.at("c").get<double>();
    in.entry_cost = j.at("R").get<double>();
    return in;
}

std::string solve_record_text(const ModelParams& p, double entry_cost,
                              const EquilibriumOutcome& out) {
    const DerivedConstants d = derived_constants(p);
    std::ostringstream s;
    auto line = [&s](const char* key, const std::string& value) {
        s << key << "  " << value << '\n';
    };
    line("entry_cost        ", format_g9(entry_cost));
    line("regime            ", to_string(out.regime));
    line("x_star            ", format_g9(out.x_star));
    line("entry             ", bool_str(out.entry));
    line("profit_p1         ", format_g9(out.profit_period1));
    line("profit_p2         ", format_g9(out.profit_period2));
    line("total             ", format_g9(out.total));
    if (out.pi_accommodation) {
        std::string acc = format_g9(*out.pi_accommodation);
        if (out.accommodation_sup_only) acc += "  (supremum, not attained)";
        line("pi_A_star         ", acc);
    } else {
        line("pi_A_star         ", "infeasible (no output induces entry)");
    }
    if (out.pi_deterrence) line("pi_D_star         ", format_g9(*out.pi_deterrence));
    if (out.advantage) line("advantage         ", format_g9(*out.advantage));
    if (out.indifferent) line("note              ", "payoff tie: both strategies earn the same");
    if (out.x_alternative)
        line("x_alternative     ", format_g9(*out.x_alternative));
    if (out.entry && out.duopoly) {
        line("p2 regime         ", to_string(out.duopoly->regime));
        line("p2 rival price    ", format_g9(out.duopoly->p_entrant));
        line("p2 rival quantity ", format_g9(out.duopoly->q_entrant));
        line("p2 rival profit   ", format_g9(out.duopoly->profit_entrant));
    } else if (out.monopoly) {
        line("p2 regime         ", "MonopolyNoEntry");
        line("p2 price          ", format_g9(out.monopoly->price));
        line("p2 quantity       ", format_g9(out.monopoly->quantity));
    }
    line("x_static          ", format_g9(d.x_static));
    line("x_monopoly        ", format_g9(d.x_monopoly));
    line("x_crossover       ", format_g9(d.x_crossover));
    line("x_entrant_peak    ", format_g9(d.x_entrant_peak));
    line("entrant_max_profit", format_g9(d.entrant_max_profit));
    line("blockade_threshold", format_g9(d.blockade_threshold));
    return s.str();
}

const char* kFigureCsvHeader = "record,series,x,y";

std::vector<FigureRecord> figure_records(const ModelParams& p, double entry_cost) {
    require_valid(p);
    const DerivedConstants d = derived_constants(p);
    const EntryRegions regions = entry_regions(p, entry_cost);

    std::vector<double> xs;
    xs.reserve(210);
    const double x_max = p.x_cap();
    for (int i = 0; i <= 200; ++i) xs.push_back(x_max * i / 200);
    auto landmark = [&xs, x_max](double x) {
        if (x >= 0 && x <= x_max) xs.push_back(x);
    };
    landmark(d.x_monopoly);
    landmark(d.x_static);
    landmark(d.x_crossover);
    landmark(d.x_entrant_peak);
    if (!regions.accommodation_empty) {
        landmark(regions.x_low);
        if (regions.x_high) landmark(*regions.x_high);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<FigureRecord> recs;
    recs.reserve(3 * xs.size() + 8);
    for (const double x : xs)
        recs.push_back({"curve", "rival_profit", x, entrant_gross_profit(p, x)});
    for (const double x : xs)
        recs.push_back({"curve", "entry_payoff", x, period1_profit(p, x)});
    for (const double x : xs)
        recs.push_back({"curve", "no_entry_payoff", x, two_period_monopoly_profit(p, x)});

    recs.push_back({"marker", "entry_cost_level", 0.0, entry_cost});
    const EntrantPeak peak = entrant_profit_peak(p);
    recs.push_back({"marker", "rival_peak", peak.x_peak, peak.max_profit});
    if (!regions.accommodation_empty) {
        recs.push_back({"marker", "entry_boundary_low", regions.x_low, entry_cost});
        if (regions.x_high) {
            recs.push_back({"marker", "entry_boundary_high", *regions.x_high, entry_cost});
            recs.push_back({"marker", "entry_payoff_at_high_boundary", *regions.x_high,
                            period1_profit(p, *regions.x_high)});
        }
        const Optimum acc = accommodation_optimum(p, entry_cost);
        recs.push_back({"marker", "accommodation_optimum", acc.x, acc.value});
    }
    const Optimum det = deterrence_optimum(p, entry_cost);
    recs.push_back({"marker", "deterrence_optimum", det.x, det.value});
    return recs;
}

std::string figure_row_csv(const FigureRecord& rec) {
    std::string row = rec.record;
    row += ',';
    row += rec.series;
    row += ',';
    row += format_g9(rec.x);
    row += ',';
    row += format_g9(rec.y);
    return row;
}

std::string figure_row_json(const FigureRecord& rec) {
    std::string j = "{\"record\":\"";
    j += rec.record;
    j += "\",\"series\":\"";
    j += rec.series;
    j += "\",\"x\":";
    j += format_g9(rec.x);
    j += ",\"y\":";
    j += format_g9(rec.y);
    j += '}';
    return j;
}

std::vector<double> Range::values() const {
    const long count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) out.push_back(lo + i * step);
    return out;
}

Range parse_range(const std::string& text) {
    double parts[3];
    size_t begin = 0;
    for (int i = 0; i < 3; ++i) {
        const size_t end = i < 2 ? text.find(':', begin) : text.size();
        if (end == std::string::npos)
            throw std::invalid_argument("range must be LO:HI:STEP, got '" + text + "'");
        const std::string piece = text.substr(begin, end - begin);
        size_t used = 0;
        try {
            parts[i] = std::stod(piece, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("range must be LO:HI:STEP, got '" + text + "'");
        }
        if (used != piece.size() || piece.empty())
            throw std::invalid_argument("range must be LO:HI:STEP, got '" + text + "'");
        begin = end + 1;
    }
    const Range range{parts[0], parts[1], parts[2]};
    if (!(range.step > 0))
        throw std::invalid_argument("range step must be positive in '" + text + "'");
    if (range.hi < range.lo)
        throw std::invalid_argument("empty range '" + text + "': HI is below LO");
    return range;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    auto trim = [](std::string s) {
        const size_t a = s.find_first_not_of(" \t\r");
        const size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not 'key = value': '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config line is not 'key = value': '" + t + "'");
        kv[key] = value;
    }
    return kv;
}

}  // namespace detergame
