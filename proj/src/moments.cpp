#include "fracmom/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracmom/errors.hpp"
#include "fracmom/quadrature.hpp"

namespace fracmom {

namespace {

const quad::Tolerance kMomentTol{1e-13, 1e-12, 4000};

// integral_0^b t^order q(t) dt with q bounded near 0
Complex half_line_power(const Density& q, double b, Complex order) {
    double c = std::min(1.0, b);
    Complex total = 0.0;
    double q0 = q(0.0);
    if (!std::isfinite(q0)) throw DomainError("density is unbounded at the origin");
    Complex p1 = order + 1.0;
    if (q0 != 0.0) {
        if (p1.real() <= 0.0) throw DomainError("power expectation diverges at the origin");
        total += q0 * std::pow(c, p1) / p1;
    }
    Complex scale = std::pow(c, p1);
    auto near = [&](double u) -> Complex {
        double d = q(c * std::exp(-u)) - q0;
        if (d == 0.0) return 0.0;
        return scale * std::exp(-u * p1) * d;
    };
    total += quad::decaying_tail(near, 0.0, kMomentTol).value;
    if (b > c) {
        if (std::isfinite(b)) {
            auto body = [&](double t) -> Complex { return std::pow(t, order) * q(t); };
            total += quad::adaptive(body, c, b, kMomentTol).value;
        } else {
            double logc = std::log(c);
            auto far = [&](double u) -> Complex {
                double v = q(c * std::exp(u));
                if (v == 0.0) return 0.0;
                return std::exp(p1 * (u + logc) + std::log(v));
            };
            total += quad::decaying_tail(far, 0.0, kMomentTol, 2.0).value;
        }
    }
    return total;
}

}  // namespace

void GridParams::validate() const {
    if (!std::isfinite(rho)) throw ArgumentError("rho must be finite");
    if (!(delta > 0.0) || !std::isfinite(delta)) throw ArgumentError("delta must be a positive finite number");
    if (m < 1) throw ArgumentError("m must be at least 1");
}

Complex power_expectation(const Density& pdf, Interval support, Complex order, PowerKernel kernel, Sign sign) {
    Complex total = 0.0;
    for (double s : {1.0, -1.0}) {
        double b = s > 0 ? support.hi : -support.lo;
        if (!(b > 0.0)) continue;
        Complex phase = 1.0;
        if (kernel == PowerKernel::signed_power) phase = signed_pow(s, order, sign);
        if (kernel == PowerKernel::plain && s < 0) phase = std::exp(Complex(0.0, kPi) * order);
        total += phase * half_line_power([&](double t) { return pdf(s * t); }, b, order);
    }
    return total;
}

Complex moment_quadrature(const Density& pdf, Interval support, Complex g, Sign sign) {
    return power_expectation(pdf, support, -g, PowerKernel::signed_power, sign);
}

MonteCarloEstimate moment_monte_carlo(std::span<const double> samples, Complex g, Sign sign) {
    if (samples.empty()) throw ArgumentError("moment_monte_carlo: no samples");
    MonteCarloEstimate est;
    std::vector<Complex> z;
    z.reserve(samples.size());
    for (double x : samples) {
        if (x == 0.0) {
            ++est.dropped;
            continue;
        }
        z.push_back(signed_pow(x, -g, sign));
    }
    if (z.empty()) throw AllSamplesDegenerateError("every sample is exactly zero");
    Complex sum = 0.0;
    for (const auto& v : z) sum += v;
    double n = double(z.size());
    est.value = sum / n;
    double ss = 0.0;
    for (const auto& v : z) ss += std::norm(v - est.value);
    est.stderr_ = z.size() > 1 ? std::sqrt(ss / (n * (n - 1.0))) : kInf;
    return est;
}

MomentGrid make_grid(const DistributionSpec& spec, const GridParams& params, Method method,
                     const MonteCarloOptions& mc) {
    params.validate();
    if (!(params.rho > 0.0) || !spec.moment_strip.contains(params.rho)) {
        std::ostringstream os;
        os << "rho = " << params.rho << " must be positive and inside the moment strip "
           << spec.moment_strip.to_string() << " of the " << family_name(spec.family) << " distribution";
        throw StripError(os.str());
    }
    if (method == Method::monte_carlo) {
        if (mc.n_samples == 0) throw ArgumentError("monte carlo needs at least one sample");
        return make_grid_from_samples(sample(spec, mc.n_samples, mc.seed), params);
    }
    MomentGrid grid{params, {}};
    grid.values.reserve(2 * params.m + 1);
    auto pdf = [&](double x) { return exact_pdf(spec, x); };
    for (int k = -params.m; k <= params.m; ++k) {
        Complex g = grid.gamma(k);
        grid.values.push_back(method == Method::closed_form ? closed_form_moment(spec, g, params.sign)
                                                            : moment_quadrature(pdf, support(spec), g, params.sign));
    }
    return grid;
}

MomentGrid make_grid_from_samples(std::span<const double> samples, const GridParams& params) {
    params.validate();
    MomentGrid grid{params, {}};
    for (int k = -params.m; k <= params.m; ++k)
        grid.values.push_back(moment_monte_carlo(samples, grid.gamma(k), params.sign).value);
    return grid;
}

Complex convert_moment(MomentKind kind_in, MomentKind kind_out, Complex order, const MomentSet& v) {
    auto need = [](const std::optional<Complex>& x, const char* name) {
        if (!x) throw ArgumentError(std::string("convert_moment: missing ") + name + " moment");
        return *x;
    };
    Complex twice_cos = 2.0 * std::cos(kPi * order / 2.0);
    bool in_signed = kind_in == MomentKind::signed_plus || kind_in == MomentKind::signed_minus;
    bool out_signed = kind_out == MomentKind::signed_plus || kind_out == MomentKind::signed_minus;
    if (in_signed == out_signed) throw ArgumentError("convert_moment: mismatched kinds");

    if (out_signed) {
        Complex plain = need(v.plain, "plain");
        if (kind_out == MomentKind::signed_minus) return i_pow(-order) * plain;
        return twice_cos * need(v.absolute, "absolute") - i_pow(-order) * plain;
    }
    if (kind_out == MomentKind::plain) {
        if (kind_in == MomentKind::signed_minus) return i_pow(order) * need(v.signed_minus, "signed_minus");
        Complex sum = need(v.signed_plus, "signed_plus");
        return i_pow(order) * (twice_cos * need(v.absolute, "absolute") - sum);
    }
    if (std::abs(twice_cos) < kPoleTolerance) throw PoleError("convert_moment: cos(pi s / 2) vanishes");
    return (need(v.signed_plus, "signed_plus") + need(v.signed_minus, "signed_minus")) / twice_cos;
}

FundamentalStrip working_strip(const DistributionSpec& spec) {
    FundamentalStrip s = spec.mellin_strip ? *spec.mellin_strip
                                           : FundamentalStrip{std::max(spec.moment_strip.lo, 0.0),
                                                              std::min(spec.moment_strip.hi, 1.0)};
    if (!(s.lo < s.hi)) throw EmptyStripError("working strip is empty for " + spec.describe());
    return s;
}

Truncation suggest_truncation(const DistributionSpec& spec, double rho, double delta, Sign sign, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("suggest_truncation: tol must be positive");
    if (!(delta > 0.0)) throw ArgumentError("suggest_truncation: delta must be positive");
    for (int m = 1; m <= kTruncationCap; ++m) {
        double eta = m * delta;
        double gamma_env = std::sqrt(2.0 * kPi) * std::pow(eta, rho - 0.5) * std::exp(-kPi * eta / 2.0);
        double mom = std::max(std::abs(closed_form_moment(spec, {rho, eta}, sign)),
                              std::abs(closed_form_moment(spec, {rho, -eta}, sign)));
        double env = gamma_env * mom;
        if (!std::isfinite(env)) return {m, true};
        if (env <= tol) return {m, false};
    }
    return {kTruncationCap, true};
}

}  // namespace fracmom
