#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracmom/distributions.hpp"
#include "fracmom/moments.hpp"

namespace fracmom::cli {

enum class Command { moments, reconstruct_cf, reconstruct_pdf, verify, strip, figures };

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
};

struct RunConfig {
    Command command = Command::strip;
    std::optional<DistributionSpec> dist;
    GridParams grid{0.4, 0.4, 25, Sign::minus};
    Method method = Method::closed_form;
    MonteCarloOptions mc;
    std::optional<Range> range;
    std::string out;
    std::string grid_in;
};

DistributionSpec distribution_from_json(const std::string& text);
DistributionSpec distribution_from_params(const std::string& family, const std::vector<std::string>& key_values);
std::vector<std::string> distribution_params(const DistributionSpec& spec);

Range parse_range(const std::string& text);
// Evenly spaced points; a range touching 0 is split into two pieces that skip |x| < min_abs.
std::vector<double> expand_range(const Range& range, double min_abs = 0.1);

// Throws ArgumentError on invalid input.
RunConfig parse_args(const std::vector<std::string>& args);

std::string help_text();

// Executes a validated config. Returns 0 on success, 1 on validation errors, 2 on numerical failures.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run, with --help handling and the same exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracmom::cli
