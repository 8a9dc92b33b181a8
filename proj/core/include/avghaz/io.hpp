#pragma once

// Text formats: survival CSV input, model description files, summary CSV
// output and number rendering.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "avghaz/piecewise_model.hpp"
#include "avghaz/simulation.hpp"
#include "avghaz/survival_data.hpp"

namespace avghaz::io {

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

/// Strict decimal parse of the whole string. Throws InvalidArgument.
double parse_double(std::string_view text);

/// `time,status` CSV with a header line; LF or CRLF. Errors are
/// Error{ParseError|NonPositiveTime|...} with index = 1-based line number.
SurvivalData read_survival_csv(std::istream& in);
SurvivalData read_survival_csv(const std::filesystem::path& path);

/// JSON object {"cuts": [0, ...], "hazards": [...]} with rates per time
/// unit; an optional "time_unit" string is accepted and ignored.
/// Throws Error{InvalidModel}.
PiecewiseExpModel read_model(std::istream& in);
PiecewiseExpModel read_model(const std::filesystem::path& path);

/// "start:stop:step" or a comma list "t1,t2,...".
std::vector<double> parse_tau_spec(std::string_view spec);

constexpr std::string_view kSummaryHeader =
    "n,tau,true_ah,mean_ah,bias,mc_se,n_defined,n_degenerate";

void write_summary_csv(std::ostream& out, const SimulationSummary& summary);

/// Writes to a sibling temporary and renames it over `path` on success,
/// so a failed write never leaves a partial file.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace avghaz::io
