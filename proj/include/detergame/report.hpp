#pragma once

#include <map>
#include <string>
#include <vector>

#include "detergame/equilibrium.hpp"
#include "detergame/model.hpp"

namespace detergame {

/// Canonical number rendering for all machine-readable output: shortest
/// %.9g form, negative zero normalized.
std::string format_g9(double value);

extern const char* kSweepCsvHeader;

/// One CSV row in the kSweepCsvHeader schema. Unavailable optional fields
/// render as empty cells.
std::string sweep_csv_row(const ModelParams& params, double entry_cost,
                          const EquilibriumOutcome& outcome);

/// Full single-solve record as one JSON line. Includes the inputs, so the
/// line can be fed back through parse_solve_record.
std::string solve_record_json(const ModelParams& params, double entry_cost,
                              const EquilibriumOutcome& outcome);

struct SolveInput {
    ModelParams params;
    double entry_cost;
};

/// Reads the inputs back out of a solve_record_json line (or any JSON object
/// with the same input keys).
SolveInput parse_solve_record(const std::string& json_line);

/// Human-readable multi-line summary of a solve.
std::string solve_record_text(const ModelParams& params, double entry_cost,
                              const EquilibriumOutcome& outcome);

extern const char* kFigureCsvHeader;

/// One sampled point of the profit diagram: three payoff curves over the
/// output axis plus the landmark markers.
struct FigureRecord {
    const char* record;  ///< "curve" or "marker"
    const char* series;
    double x;
    double y;
};

/// Samples the two no-entry/entry payoff curves and the rival profit curve on
/// a 201-point uniform grid over [0, x_cap], with the landmark outputs
/// spliced in so the marked points are sampled exactly. Requires theta > phi.
std::vector<FigureRecord> figure_records(const ModelParams& params, double entry_cost);

std::string figure_row_csv(const FigureRecord& rec);
std::string figure_row_json(const FigureRecord& rec);

/// Inclusive numeric range "LO:HI:STEP".
struct Range {
    double lo;
    double hi;
    double step;
    std::vector<double> values() const;
};

/// Parses "LO:HI:STEP". Throws std::invalid_argument on malformed input,
/// non-positive step, or an empty range (hi < lo).
Range parse_range(const std::string& text);

/// Key-value config file: one "key = value" per line, '#' starts a comment.
/// Keys mirror the long command-line flags with underscores.
std::map<std::string, std::string> parse_config_file(const std::string& path);

}  // namespace detergame
