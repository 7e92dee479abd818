#include "fracmom/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "fracmom/errors.hpp"

namespace fracmom {

Complex cf_series(const MomentGrid& grid, double theta) {
    if (theta == 0.0) throw DomainError("cf_series diverges at theta = 0");
    const GridParams& p = grid.params;
    double log_t = std::log(std::abs(theta));
    Complex sum = 0.0;
    for (int k = -p.m; k <= p.m; ++k) {
        Complex g = grid.gamma(k);
        sum += complex_gamma(g) * grid.at(k) * std::exp(-g * log_t);
    }
    sum *= p.delta / (2.0 * kPi);
    bool matches = (p.sign == Sign::minus) == (theta > 0.0);
    return matches ? sum : std::conj(sum);
}

Complex cf_value(const MomentGrid& grid, double theta) { return theta == 0.0 ? Complex(1.0) : cf_series(grid, theta); }

Complex pdf_series_sum(const MomentGrid& grid, double x) {
    if (x == 0.0) throw DomainError("pdf_series has no finite value at x = 0");
    const GridParams& p = grid.params;
    if (p.sign != Sign::minus)
        throw ArgumentError("pdf_series needs a grid of E[(-iX)^(-gamma)] moments (sign minus)");
    Complex sum = 0.0;
    for (int k = -p.m; k <= p.m; ++k) {
        Complex g = grid.gamma(k);
        sum += reflection_product(g) * grid.at(k) * signed_pow(x, g - 1.0, Sign::plus);
    }
    return sum * (p.delta / (2.0 * kPi * kPi));
}

double pdf_series(const MomentGrid& grid, double x) { return pdf_series_sum(grid, x).real(); }

Complex classical_taylor_cf(const DistributionSpec& spec, double theta, int order) {
    if (order < 0) throw ArgumentError("classical_taylor_cf: order must be non-negative");
    if (spec.family == Family::cauchy || spec.family == Family::levy)
        throw UnsupportedError("classical Taylor series of the " + std::string(family_name(spec.family)) +
                               " CF is a sum of divergent terms");
    Complex term = 1.0;  // (i theta)^j / j!
    Complex sum = 0.0;
    for (int j = 0; j <= order; ++j) {
        if (j > 0) term *= Complex(0.0, theta) / double(j);
        sum += term * integer_moment(spec, j);
    }
    return sum;
}

Complex residue_partial_sum(double theta, int terms) {
    if (terms < 1) throw ArgumentError("residue_partial_sum: terms must be at least 1");
    Complex sum = 0.0;
    for (int k = 0; k < terms; ++k) {
        int n = 2 * k;
        double residue = (n % 2 ? -1.0 : 1.0) / std::tgamma(n + 1.0);
        // E[(-iX)^n] for the standard Gaussian
        double even_moment = std::pow(2.0, k) * std::tgamma(k + 0.5) / std::sqrt(kPi);
        double signed_moment = (k % 2 ? -1.0 : 1.0) * even_moment;
        sum += residue * signed_moment * std::pow(theta, n);
    }
    return sum;
}

double CurveResult::max_abs_err() const {
    if (!abs_err || abs_err->empty()) return 0.0;
    return *std::max_element(abs_err->begin(), abs_err->end());
}

CurveResult sample_curve(const MomentGrid& grid, CurveKind kind, std::span<const double> abscissae,
                         const DistributionSpec* exact) {
    CurveResult out;
    out.kind = kind;
    out.params = grid.params;
    out.abscissae.assign(abscissae.begin(), abscissae.end());
    out.values.reserve(abscissae.size());
    for (double x : abscissae) {
        if (kind == CurveKind::cf) {
            out.values.push_back(cf_series(grid, x));
        } else {
            Complex s = pdf_series_sum(grid, x);
            out.max_imag_residual = std::max(out.max_imag_residual, std::abs(s.imag()));
            out.values.emplace_back(s.real(), 0.0);
        }
    }
    if (exact) {
        std::vector<Complex> ref;
        std::vector<double> err;
        for (std::size_t i = 0; i < abscissae.size(); ++i) {
            double x = abscissae[i];
            ref.push_back(kind == CurveKind::cf ? exact_cf(*exact, x) : Complex(exact_pdf(*exact, x), 0.0));
            err.push_back(std::abs(out.values[i] - ref.back()));
        }
        out.exact = std::move(ref);
        out.abs_err = std::move(err);
    }
    return out;
}

}  // namespace fracmom
