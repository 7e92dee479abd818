#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracmom/special.hpp"

namespace fracmom {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Family { uniform, rayleigh, cauchy, levy, gaussian };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);  // ArgumentError on unknown names

// open interval (lo, hi)
struct FundamentalStrip {
    double lo = -kInf;
    double hi = kInf;

    bool contains(double rho) const { return rho > lo && rho < hi; }
    std::string to_string() const;
};

struct Interval {
    double lo;
    double hi;
};

struct DistributionSpec {
    Family family = Family::cauchy;
    double location = 0.0;  // Gaussian mean
    double scale = 1.0;     // Uniform half-width a, Rayleigh sigma, Gaussian s
    FundamentalStrip moment_strip;
    std::optional<FundamentalStrip> mellin_strip;

    static DistributionSpec uniform(double a);
    static DistributionSpec rayleigh(double sigma);
    static DistributionSpec cauchy();
    static DistributionSpec levy();
    static DistributionSpec gaussian(double mu, double s);

    std::string describe() const;
};

Interval support(const DistributionSpec& spec);

double exact_pdf(const DistributionSpec& spec, double x);
Complex exact_cf(const DistributionSpec& spec, double theta);
// 1 - phi(theta), evaluated without cancellation near theta = 0
Complex exact_cf_complement(const DistributionSpec& spec, double theta);

// E[(-iX)^(-g)] for Sign::minus, E[(+iX)^(-g)] for Sign::plus. StripError outside moment_strip.
Complex closed_form_moment(const DistributionSpec& spec, Complex g, Sign sign);

// E[X^j]; UnsupportedError when integer moments do not exist.
double integer_moment(const DistributionSpec& spec, int j);

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed);

}  // namespace fracmom
