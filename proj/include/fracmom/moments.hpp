#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fracmom/distributions.hpp"
#include "fracmom/special.hpp"

namespace fracmom {

struct GridParams {
    double rho = 0.4;
    double delta = 0.4;
    int m = 10;
    Sign sign = Sign::minus;

    void validate() const;  // ArgumentError
};

// values[k + m] = E[(-+iX)^(-gamma_k)], gamma_k = rho + i k delta
struct MomentGrid {
    GridParams params;
    std::vector<Complex> values;

    Complex gamma(int k) const { return {params.rho, k * params.delta}; }
    const Complex& at(int k) const { return values.at(static_cast<std::size_t>(k + params.m)); }
    std::size_t size() const { return values.size(); }
};

enum class Method { closed_form, quadrature, monte_carlo };

struct MonteCarloOptions {
    std::size_t n_samples = 1000000;
    std::uint64_t seed = 20240601;
};

using Density = std::function<double(double)>;

enum class PowerKernel { signed_power, plain, absolute };

// E[k(X)^order] for k(X) = (-+iX), X (principal branch) or |X|, by quadrature split at the origin.
Complex power_expectation(const Density& pdf, Interval support, Complex order, PowerKernel kernel,
                          Sign sign = Sign::minus);

// E[(-+iX)^(-g)]
Complex moment_quadrature(const Density& pdf, Interval support, Complex g, Sign sign);

struct MonteCarloEstimate {
    Complex value;
    double stderr_ = 0.0;
    std::size_t dropped = 0;
};

MonteCarloEstimate moment_monte_carlo(std::span<const double> samples, Complex g, Sign sign);

MomentGrid make_grid(const DistributionSpec& spec, const GridParams& params, Method method,
                     const MonteCarloOptions& mc = {});
MomentGrid make_grid_from_samples(std::span<const double> samples, const GridParams& params);

enum class MomentKind { signed_plus, signed_minus, plain, absolute };

struct MomentSet {
    std::optional<Complex> signed_plus;
    std::optional<Complex> signed_minus;
    std::optional<Complex> plain;
    std::optional<Complex> absolute;
};

// Conversions among E[(iX)^s], E[(-iX)^s], E[X^s], E[|X|^s] for a common order s (s = +-gamma).
Complex convert_moment(MomentKind kind_in, MomentKind kind_out, Complex order, const MomentSet& values);

FundamentalStrip working_strip(const DistributionSpec& spec);

struct Truncation {
    int m = 1;
    bool capped = false;
};

inline constexpr int kTruncationCap = 10000;

Truncation suggest_truncation(const DistributionSpec& spec, double rho, double delta, Sign sign, double tol);

}  // namespace fracmom
