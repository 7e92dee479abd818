#include "fracmom/distributions.hpp"

#include <gsl/gsl_sf_dawson.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "fracmom/errors.hpp"
#include "fracmom/moments.hpp"

namespace fracmom {

namespace {

constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kSqrtPi = 1.77245385090551602730;

Complex expm1(Complex z) {
    double x = z.real();
    double y = z.imag();
    double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ArgumentError(std::string(what) + " must be a positive finite number");
}

void require_in_strip(const DistributionSpec& spec, Complex g) {
    if (!spec.moment_strip.contains(g.real())) {
        std::ostringstream os;
        os << "Re(gamma) = " << g.real() << " is outside the moment strip " << spec.moment_strip.to_string()
           << " of the " << family_name(spec.family) << " distribution";
        throw StripError(os.str());
    }
}

struct SeriesValue {
    Complex value;
    double largest_term;
};

// integral_0^inf x^(-g) exp(-(x - c)^2 / 2) dx by its power series in c
SeriesValue shifted_half_gaussian(Complex g, double c) {
    Complex even = std::pow(2.0, (-g - 1.0) / 2.0) * complex_gamma((1.0 - g) / 2.0);
    Complex odd = c * std::pow(2.0, -g / 2.0) * complex_gamma(1.0 - g / 2.0);
    Complex sum = even + odd;
    double largest = std::max(std::abs(even), std::abs(odd));
    double c2 = c * c;
    for (int n = 0; n < 600; n += 2) {
        even *= c2 * (double(n) + 1.0 - g) / ((n + 1.0) * (n + 2.0));
        odd *= c2 * (double(n) + 2.0 - g) / ((n + 2.0) * (n + 3.0));
        sum += even + odd;
        largest = std::max({largest, std::abs(even), std::abs(odd)});
        if (n > c2 && std::abs(even) + std::abs(odd) < 1e-17 * std::abs(sum)) break;
    }
    double w = std::exp(-0.5 * c2);
    return {w * sum, w * largest};
}

Complex gaussian_moment(const DistributionSpec& spec, Complex g, Sign sign) {
    double c = spec.location / spec.scale;
    auto by_quadrature = [&] {
        return moment_quadrature([&](double x) { return exact_pdf(spec, x); }, support(spec), g, sign);
    };
    if (std::abs(c) > 5.0) return by_quadrature();
    auto r = shifted_half_gaussian(g, c);
    auto l = shifted_half_gaussian(g, -c);
    Complex right = signed_pow(1.0, -g, sign) * r.value;
    Complex left = signed_pow(-1.0, -g, sign) * l.value;
    // switch to quadrature once cancellation would cost more than three digits
    double scale = std::abs(signed_pow(1.0, -g, sign)) * r.largest_term +
                   std::abs(signed_pow(-1.0, -g, sign)) * l.largest_term;
    if (scale > 1e3 * std::abs(right + left)) return by_quadrature();
    return std::pow(spec.scale, -g) / kSqrt2Pi * (right + left);
}

// 1 - 2x D(x), D the Dawson integral; the asymptotic series avoids the cancellation
double one_minus_two_x_dawson(double x) {
    double ax = std::abs(x);
    if (ax < 8.0) return 1.0 - 2.0 * x * gsl_sf_dawson(x);
    double r = 1.0 / (2.0 * x * x);
    double term = -r;
    double sum = term;
    for (int n = 2; n < 60; ++n) {
        double next = term * (2.0 * n - 1.0) * r;
        if (std::abs(next) >= std::abs(term) || std::abs(next) < 1e-18 * std::abs(sum)) break;
        term = next;
        sum += term;
    }
    return sum;
}

double unit_uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

double open_unit_uniform(std::mt19937_64& rng) { return (double(rng() >> 11) + 0.5) * 0x1.0p-53; }

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::uniform: return "uniform";
        case Family::rayleigh: return "rayleigh";
        case Family::cauchy: return "cauchy";
        case Family::levy: return "levy";
        case Family::gaussian: return "gaussian";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::uniform, Family::rayleigh, Family::cauchy, Family::levy, Family::gaussian})
        if (family_name(f) == name) return f;
    throw ArgumentError("unknown distribution family '" + std::string(name) +
                        "' (expected uniform, rayleigh, cauchy, levy or gaussian)");
}

std::string FundamentalStrip::to_string() const {
    auto fmt = [](double v) {
        if (v == kInf) return std::string("inf");
        if (v == -kInf) return std::string("-inf");
        std::ostringstream os;
        os << v;
        return os.str();
    };
    return "(" + fmt(lo) + ", " + fmt(hi) + ")";
}

DistributionSpec DistributionSpec::uniform(double a) {
    require_positive(a, "uniform half-width a");
    return {Family::uniform, 0.0, a, {-kInf, 1.0}, std::nullopt};
}

DistributionSpec DistributionSpec::rayleigh(double sigma) {
    require_positive(sigma, "rayleigh sigma");
    return {Family::rayleigh, 0.0, sigma, {-kInf, 2.0}, std::nullopt};
}

DistributionSpec DistributionSpec::cauchy() { return {Family::cauchy, 0.0, 1.0, {-1.0, 1.0}, std::nullopt}; }

DistributionSpec DistributionSpec::levy() { return {Family::levy, 0.0, 1.0, {-0.5, kInf}, std::nullopt}; }

DistributionSpec DistributionSpec::gaussian(double mu, double s) {
    if (!std::isfinite(mu)) throw ArgumentError("gaussian mu must be finite");
    require_positive(s, "gaussian sigma");
    return {Family::gaussian, mu, s, {-kInf, 1.0}, FundamentalStrip{0.0, kInf}};
}

std::string DistributionSpec::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << family_name(family);
    switch (family) {
        case Family::uniform: os << " a=" << scale; break;
        case Family::rayleigh: os << " sigma=" << scale; break;
        case Family::gaussian: os << " mu=" << location << " sigma=" << scale; break;
        default: break;
    }
    return os.str();
}

Interval support(const DistributionSpec& spec) {
    switch (spec.family) {
        case Family::uniform: return {-spec.scale, spec.scale};
        case Family::rayleigh:
        case Family::levy: return {0.0, kInf};
        default: return {-kInf, kInf};
    }
}

double exact_pdf(const DistributionSpec& spec, double x) {
    switch (spec.family) {
        case Family::uniform: return std::abs(x) <= spec.scale ? 0.5 / spec.scale : 0.0;
        case Family::rayleigh: {
            if (x <= 0.0) return 0.0;
            double s2 = spec.scale * spec.scale;
            return x / s2 * std::exp(-x * x / (2.0 * s2));
        }
        case Family::cauchy: return 1.0 / (kPi * (1.0 + x * x));
        case Family::levy:
            if (x <= 0.0) return 0.0;
            return std::exp(-std::log(kSqrt2Pi) - 1.5 * std::log(x) - 0.5 / x);
        case Family::gaussian: {
            double z = (x - spec.location) / spec.scale;
            return std::exp(-0.5 * z * z) / (kSqrt2Pi * spec.scale);
        }
    }
    return 0.0;
}

Complex exact_cf(const DistributionSpec& spec, double theta) {
    if (theta == 0.0) return 1.0;
    switch (spec.family) {
        case Family::uniform: {
            double t = spec.scale * theta;
            return std::sin(t) / t;
        }
        case Family::rayleigh: {
            double t = spec.scale * theta;
            double x = t / std::sqrt(2.0);
            return {one_minus_two_x_dawson(x), t * std::sqrt(kPi / 2.0) * std::exp(-x * x)};
        }
        case Family::cauchy: return std::exp(-std::abs(theta));
        case Family::levy: return std::exp(-std::sqrt(Complex(0.0, -2.0 * theta)));
        case Family::gaussian: {
            double s = spec.scale * theta;
            return std::exp(Complex(-0.5 * s * s, spec.location * theta));
        }
    }
    return 0.0;
}

Complex exact_cf_complement(const DistributionSpec& spec, double theta) {
    if (theta == 0.0) return 0.0;
    switch (spec.family) {
        case Family::uniform: {
            double t = spec.scale * theta;
            if (std::abs(t) < 0.1) {
                double t2 = t * t;
                return t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0)));
            }
            return 1.0 - std::sin(t) / t;
        }
        case Family::rayleigh: {
            double t = spec.scale * theta;
            double x = t / std::sqrt(2.0);
            return {std::sqrt(2.0) * t * gsl_sf_dawson(x), -t * std::sqrt(kPi / 2.0) * std::exp(-x * x)};
        }
        case Family::cauchy: return -std::expm1(-std::abs(theta));
        case Family::levy: return -expm1(-std::sqrt(Complex(0.0, -2.0 * theta)));
        case Family::gaussian: {
            double s = spec.scale * theta;
            return -expm1(Complex(-0.5 * s * s, spec.location * theta));
        }
    }
    return 0.0;
}

Complex closed_form_moment(const DistributionSpec& spec, Complex g, Sign sign) {
    require_in_strip(spec, g);
    switch (spec.family) {
        case Family::uniform: return std::pow(spec.scale, -g) * std::cos(kPi * g / 2.0) / (1.0 - g);
        case Family::rayleigh:
            return std::pow(2.0, -g / 2.0) * signed_pow(spec.scale, -g, sign) * complex_gamma(1.0 - g / 2.0);
        case Family::cauchy: return 1.0;
        case Family::levy:
            return signed_pow(1.0, -g, sign) * std::pow(2.0, g) * complex_gamma(g + 0.5) / kSqrtPi;
        case Family::gaussian: return gaussian_moment(spec, g, sign);
    }
    return 0.0;
}

double integer_moment(const DistributionSpec& spec, int j) {
    if (j < 0) throw ArgumentError("integer_moment: negative order");
    if (j == 0) return 1.0;
    switch (spec.family) {
        case Family::uniform: return j % 2 ? 0.0 : std::pow(spec.scale, j) / (j + 1.0);
        case Family::rayleigh: return std::pow(spec.scale * std::sqrt(2.0), j) * std::tgamma(1.0 + 0.5 * j);
        case Family::gaussian: {
            double s2 = spec.scale * spec.scale;
            double prev = 1.0;
            double cur = spec.location;
            for (int k = 2; k <= j; ++k) {
                double next = spec.location * cur + (k - 1) * s2 * prev;
                prev = cur;
                cur = next;
            }
            return cur;
        }
        case Family::cauchy:
        case Family::levy: break;
    }
    throw UnsupportedError(std::string("integer moments of the ") + std::string(family_name(spec.family)) +
                           " distribution diverge");
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ArgumentError("sample: n must be at least 1");
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    auto normal_pair = [&](double& z0, double& z1) {
        double r = std::sqrt(-2.0 * std::log(open_unit_uniform(rng)));
        double phi = 2.0 * kPi * unit_uniform(rng);
        z0 = r * std::cos(phi);
        z1 = r * std::sin(phi);
    };
    switch (spec.family) {
        case Family::uniform:
            for (auto& x : out) x = spec.scale * (2.0 * unit_uniform(rng) - 1.0);
            break;
        case Family::rayleigh:
            for (auto& x : out) x = spec.scale * std::sqrt(-2.0 * std::log(open_unit_uniform(rng)));
            break;
        case Family::cauchy:
            for (auto& x : out) x = std::tan(kPi * (open_unit_uniform(rng) - 0.5));
            break;
        case Family::levy:
        case Family::gaussian:
            for (std::size_t i = 0; i < n; i += 2) {
                double z0, z1;
                normal_pair(z0, z1);
                double pair[2] = {z0, z1};
                for (int k = 0; k < 2 && i + k < n; ++k) {
                    double z = pair[k];
                    out[i + k] = spec.family == Family::levy ? 1.0 / (z * z) : spec.location + spec.scale * z;
                }
            }
            break;
    }
    return out;
}

}  // namespace fracmom
