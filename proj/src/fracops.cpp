#include "fracmom/fracops.hpp"

#include <cmath>

#include "fracmom/errors.hpp"
#include "fracmom/quadrature.hpp"

namespace fracmom {

namespace {

constexpr int kMaxOctaves = 48;

// smooth cutoff: 1 at t <= 0, 0 at t >= 1, C-infinity in between
double cutoff(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    double a = std::exp(-1.0 / t);
    double b = std::exp(-1.0 / (1.0 - t));
    return b / (a + b);
}

// integral_0^1 xi^(s-1) (g(xi) - g(0)) dxi, through xi = e^-u
Complex near_origin(const ComplexFunction& g, Complex s, Complex g0, const quad::Tolerance& tol) {
    auto f = [&](double u) -> Complex {
        Complex d = g(std::exp(-u)) - g0;
        if (d == 0.0) return 0.0;
        return std::exp(-u * s) * d;
    };
    return quad::decaying_tail(f, 0.0, tol, 4.0).value;
}

// integral_1^inf xi^(s-1) g(xi) dxi over octaves, accelerated with a smooth window
Complex far_field(const ComplexFunction& g, Complex s, const quad::Tolerance& tol) {
    auto h = [&](double xi) -> Complex {
        Complex v = g(xi);
        if (v == 0.0) return 0.0;
        return std::pow(xi, s - 1.0) * v;
    };
    Complex partial = 0.0;
    Complex prev_window = 0.0;
    int settled = 0;
    double last_change = kInf;
    for (int j = 0; j < kMaxOctaves; ++j) {
        double lo = std::ldexp(1.0, j);
        double hi = 2.0 * lo;
        auto windowed = [&](double xi) -> Complex { return h(xi) * cutoff((xi - lo) / lo); };
        Complex window = partial + quad::adaptive(windowed, lo, hi, tol).value;
        Complex chunk = quad::adaptive(h, lo, hi, tol).value;
        partial += chunk;
        last_change = std::abs(window - prev_window);
        double target = std::max(10.0 * tol.abs, 10.0 * tol.rel * std::abs(window));
        if (j > 0 && last_change <= target) {
            if (++settled >= 2) return window;
        } else {
            settled = 0;
        }
        prev_window = window;
    }
    throw QuadratureError("tail of the fractional integral did not converge", last_change);
}

// integral_0^inf xi^(s-1) g(xi) dxi
Complex mellin_integral(const ComplexFunction& g, Complex s, const quad::Tolerance& tol) {
    Complex g0 = g(0.0);
    return g0 / s + near_origin(g, s, g0, tol) + far_field(g, s, tol);
}

Complex weyl(const ComplexFunction& f, Complex g, Side side, double x, const quad::Tolerance& tol) {
    if (!(g.real() > 0.0)) throw DomainError("fractional integral needs Re(gamma) > 0");
    double dir = side == Side::plus ? -1.0 : 1.0;
    auto shifted = [&](double xi) { return f(x + dir * xi); };
    return mellin_integral(shifted, g, tol) / complex_gamma(g);
}

const quad::Tolerance kOperatorTol{1e-13, 1e-12, 6000};

}  // namespace

Complex CharacteristicFunction::one_minus(double theta) const {
    if (complement) return complement(theta);
    return value(0.0) - value(theta);
}

CharacteristicFunction characteristic_function(const DistributionSpec& spec) {
    return {[spec](double t) { return exact_cf(spec, t); },
            [spec](double t) { return exact_cf_complement(spec, t); }};
}

Complex rl_integral_at_zero(const ComplexFunction& f, Complex g, Side side) {
    return weyl(f, g, side, 0.0, kOperatorTol);
}

Complex weyl_integral(const ComplexFunction& f, Complex g, Side side, double x) {
    return weyl(f, g, side, x, kOperatorTol);
}

Complex marchaud_derivative_at_zero(const CharacteristicFunction& cf, Complex g, Side side) {
    if (!(g.real() > 0.0 && g.real() < 1.0)) throw DomainError("Marchaud derivative needs 0 < Re(gamma) < 1");
    double dir = side == Side::plus ? -1.0 : 1.0;
    auto near = [&](double u) -> Complex {
        Complex c = cf.one_minus(dir * std::exp(-u));
        if (c == 0.0) return 0.0;
        return std::exp(u * g) * c;
    };
    Complex lower = quad::decaying_tail(near, 0.0, kOperatorTol, 4.0).value;
    Complex upper = cf.value(0.0) / g - far_field([&](double xi) { return cf.value(dir * xi); }, -g, kOperatorTol);
    return g / complex_gamma(1.0 - g) * (lower + upper);
}

Complex riesz_derivative_at_zero(const CharacteristicFunction& cf, Complex g) {
    Complex c = std::cos(g * kPi / 2.0);
    if (std::abs(c) < kPoleTolerance) throw PoleError("Riesz derivative: cos(gamma pi / 2) vanishes");
    Complex sum = marchaud_derivative_at_zero(cf, g, Side::plus) + marchaud_derivative_at_zero(cf, g, Side::minus);
    return -sum / (2.0 * c);
}

Complex riesz_integral_at_zero(const ComplexFunction& f, Complex g) {
    Complex c = std::cos(g * kPi / 2.0);
    if (std::abs(c) < kPoleTolerance) throw PoleError("Riesz integral: cos(gamma pi / 2) vanishes");
    return (rl_integral_at_zero(f, g, Side::plus) + rl_integral_at_zero(f, g, Side::minus)) / (2.0 * c);
}

Complex mellin_forward(const ComplexFunction& f, Complex g, Side side) {
    if (!(g.real() > 0.0)) throw StripError("Mellin transform needs Re(gamma) > 0 here");
    double dir = side == Side::plus ? 1.0 : -1.0;
    auto inner = [&](double v) -> Complex { return std::exp(-v * g) * f(dir * std::exp(-v)); };
    auto outer = [&](double u) -> Complex {
        Complex y = f(dir * std::exp(u));
        if (y == 0.0) return 0.0;
        return std::exp(u * g) * y;
    };
    return quad::decaying_tail(inner, 0.0, kOperatorTol, 4.0).value +
           quad::decaying_tail(outer, 0.0, kOperatorTol, 1.0, 200.0).value;
}

CompositionReport composition_check(Complex g1, Complex g2, const ComplexFunction& f,
                                    const std::vector<double>& points, Side side) {
    CompositionReport report;
    report.points = points;
    const quad::Tolerance inner_tol{1e-12, 1e-12, 6000};
    const quad::Tolerance outer_tol{1e-9, 1e-9, 6000};
    auto apply = [&](const ComplexFunction& fn, Complex g, double x, const quad::Tolerance& tol) -> Complex {
        if (g == 0.0) return fn(x);
        return weyl(fn, g, side, x, tol);
    };
    ComplexFunction inner = [&](double y) { return apply(f, g2, y, inner_tol); };
    for (double x : points) {
        Complex nested = g2 == 0.0 ? apply(f, g1, x, kOperatorTol) : apply(inner, g1, x, outer_tol);
        Complex direct = apply(f, g1 + g2, x, kOperatorTol);
        report.nested.push_back(nested);
        report.direct.push_back(direct);
        report.max_deviation = std::max(report.max_deviation, std::abs(nested - direct));
    }
    return report;
}

}  // namespace fracmom
