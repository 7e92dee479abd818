// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fracmom/errors.hpp"
#include "fracmom/fracops.hpp"
#include "fracmom/identities.hpp"
#include "fracmom/quadrature.hpp"
#include "fracmom/reconstruct.hpp"
#include "golden_values.hpp"

using namespace fracmom;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

int failures = 0;

void report(const std::string& id, const std::string& title, double budget_s, const std::function<Outcome()>& body,
            bool counts = true) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < budget_s;
    bool ok = o.passed && in_time;
    const char* tag = counts ? (ok ? "PASS" : "FAIL") : (ok ? "info-pass" : "info-fail");
    std::printf("[%s] %-4s %s | %s | %.2fs (budget %.0fs)%s\n", tag, id.c_str(), title.c_str(), o.detail.c_str(), secs,
                budget_s, in_time ? "" : " OVER BUDGET");
    std::fflush(stdout);
    if (counts && !ok) ++failures;
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

// grid on [lo, hi] without the points with |x| < 0.1
std::vector<double> punctured(double lo, double hi, int n) {
    std::vector<double> xs;
    for (double x : linspace(lo, hi, n))
        if (std::abs(x) >= 0.1) xs.push_back(x);
    if (lo < -0.1 && hi > 0.1) {
        xs.push_back(-0.1);
        xs.push_back(0.1);
    }
    return xs;
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

MomentGrid grid(const DistributionSpec& spec, double rho, int m, Method method = Method::closed_form,
                Sign sign = Sign::minus) {
    return make_grid(spec, {rho, 0.4, m, sign}, method);
}

double curve_error(const MomentGrid& g, CurveKind kind, const std::vector<double>& xs, const DistributionSpec& spec) {
    return sample_curve(g, kind, xs, &spec).max_abs_err();
}

std::vector<DistributionSpec> catalog() {
    return {DistributionSpec::uniform(2.0), DistributionSpec::rayleigh(2.0), DistributionSpec::cauchy(),
            DistributionSpec::levy(), DistributionSpec::gaussian(2.0, 1.0)};
}

// frozen from the first verified run: 0.0732635 (see README)
constexpr double kUniformCfFrozen = 0.0733;

Outcome pdf_curve(const DistributionSpec& spec, int m, const std::vector<double>& xs, double tol) {
    double err = curve_error(grid(spec, 0.4, m), CurveKind::pdf, xs, spec);
    return {err <= tol, std::string(family_name(spec.family)) + " m=" + std::to_string(m) + fmt(" max err %.4g", err)};
}

}  // namespace

int main() {
    report("1", "identity suite, rho=0.4 delta=0.4 m=5, tol 1e-4", 60, [] {
        int total = 0, bad = 0;
        double worst = 0.0;
        for (const auto& spec : catalog())
            for (const auto& c : identity_suite(spec, 0.4, 0.4, 5, 1e-4)) {
                ++total;
                if (!c.passed) ++bad;
                worst = std::max(worst, c.rel_deviation);
            }
        return Outcome{bad == 0 && total > 0,
                       std::to_string(total - bad) + "/" + std::to_string(total) + fmt(" checks, worst rel %.3g", worst)};
    });

    report("2a", "closed form vs quadrature moments, tol 1e-6", 10, [] {
        double worst = 0.0;
        for (const auto& spec : catalog())
            for (Sign s : {Sign::minus, Sign::plus}) {
                auto a = grid(spec, 0.4, 5, Method::closed_form, s);
                auto b = grid(spec, 0.4, 5, Method::quadrature, s);
                for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, rel(b.values[i], a.values[i]));
            }
        return Outcome{worst <= 1e-6, fmt("worst rel %.3g", worst)};
    });

    report("2b", "Monte Carlo n=1e6 within 4 standard errors", 30, [] {
        double worst = 0.0;
        for (const auto& spec : {DistributionSpec::uniform(2.0), DistributionSpec::cauchy(),
                                 DistributionSpec::gaussian(2.0, 1.0)}) {
            auto xs = sample(spec, 1'000'000, 20240601);
            for (int k = -5; k <= 5; ++k) {
                Complex g{0.4, 0.4 * k};
                auto est = moment_monte_carlo(xs, g, Sign::minus);
                double z = std::abs(est.value - closed_form_moment(spec, g, Sign::minus)) / est.stderr_;
                worst = std::max(worst, z);
            }
        }
        return Outcome{worst <= 4.0, fmt("largest deviation %.2f standard errors", worst)};
    });

    auto uniform = DistributionSpec::uniform(2.0);
    report("3", "uniform(a=2) cf, m=25, max err <= 1e-2 on [0.1, 20], |cf(100)| < |cf(20)|", 5, [&] {
        auto g = grid(uniform, 0.4, 25);
        double err = curve_error(g, CurveKind::cf, linspace(0.1, 20, 400), uniform);
        bool decays = std::abs(cf_series(g, 100)) < std::abs(cf_series(g, 20));
        return Outcome{err <= 1e-2 && decays, fmt("max err %.4g", err) + (decays ? ", decays" : ", does not decay")};
    });
    report("3r", "uniform(a=2) cf non-regression at 1.5x frozen max err", 5, [&] {
        double err = curve_error(grid(uniform, 0.4, 25), CurveKind::cf, linspace(0.1, 20, 400), uniform);
        return Outcome{err <= 1.5 * kUniformCfFrozen, fmt("max err %.4g", err) + fmt(" bound %.4g", 1.5 * kUniformCfFrozen)};
    });

    report("4", "taylor order 8 exceeds 1 on [5, 10], fractional series stays <= 1.05", 1, [&] {
        auto g = grid(uniform, 0.4, 25);
        double taylor = 0.0, frac = 0.0;
        for (double t : linspace(5, 10, 101)) {
            taylor = std::max(taylor, std::abs(classical_taylor_cf(uniform, t, 8)));
            frac = std::max(frac, std::abs(cf_series(g, t)));
        }
        return Outcome{taylor > 1.0 && frac <= 1.05, fmt("max |taylor| %.4g", taylor) + fmt(", max |series| %.4g", frac)};
    });

    report("5", "cauchy cf, m=25, max err <= 1e-2 on [0.1, 10]", 5, [] {
        auto spec = DistributionSpec::cauchy();
        double err = curve_error(grid(spec, 0.4, 25), CurveKind::cf, linspace(0.1, 10, 400), spec);
        return Outcome{err <= 1e-2, fmt("max err %.4g", err)};
    });

    report("6", "levy cf, rho=0.9, m=25, max err <= 2e-2 on [0.1, 10]", 5, [] {
        auto spec = DistributionSpec::levy();
        double oracle = 0.0;
        for (const auto& c : golden::kLevyCf) oracle = std::max(oracle, rel(exact_cf(spec, c.theta), c.value));
        if (oracle > 1e-10) return Outcome{false, fmt("exact cf disagrees with oracle, rel %.3g", oracle)};
        double err = curve_error(grid(spec, 0.9, 25), CurveKind::cf, linspace(0.1, 10, 400), spec);
        return Outcome{err <= 2e-2, fmt("exact cf vs oracle %.2g", oracle) + fmt(", max err %.4g", err)};
    });

    auto gauss = DistributionSpec::gaussian(2.0, 1.0);
    auto cauchy = DistributionSpec::cauchy();
    auto levy = DistributionSpec::levy();
    auto gx = punctured(-2, 6, 401), cx = punctured(-10, 10, 401), lx = linspace(0.1, 10, 400);
    report("7a", "gaussian(2,1) pdf, 30 moments (m=29), max err <= 1e-2 on [-2, 6]", 10,
           [&] { return pdf_curve(gauss, 29, gx, 1e-2); });
    report("7b", "cauchy pdf, 10 moments (m=9), max err <= 1e-2 on [-10, 10]", 10,
           [&] { return pdf_curve(cauchy, 9, cx, 1e-2); });
    report("7c", "levy pdf, 10 moments (m=9), max err <= 1e-2 on [0.1, 10]", 10,
           [&] { return pdf_curve(levy, 9, lx, 1e-2); });
    report("7d", "cauchy pdf tail, m=9, relative err at |x|=10 <= 10%", 10, [&] {
        auto g = grid(cauchy, 0.4, 9);
        double worst = 0.0;
        for (double x : {-10.0, 10.0})
            worst = std::max(worst, std::abs(pdf_series(g, x) - exact_pdf(cauchy, x)) / exact_pdf(cauchy, x));
        return Outcome{worst <= 0.10, fmt("relative err %.4g", worst)};
    });
    report("7i", "pdfs with 2m+1 = 31 / 11 nodes (m=15 gaussian, m=5 cauchy and levy)", 10,
           [&] {
               auto a = pdf_curve(gauss, 15, gx, 1e-2), b = pdf_curve(cauchy, 5, cx, 1e-2), c = pdf_curve(levy, 5, lx, 1e-2);
               return Outcome{a.passed && b.passed && c.passed, a.detail + "; " + b.detail + "; " + c.detail};
           },
           false);

    report("8", "cauchy pdf (m=9) mass on [-50, 50] within [0.95, 1.0]", 5, [&] {
        auto g = grid(cauchy, 0.4, 9);
        quad::Tolerance tol{1e-12, 1e-9, 4000};
        // x = 50 e^(-v) on each half line absorbs the |x|^(rho - 1) singularity at the origin
        double mass = 0.0;
        for (double s : {-1.0, 1.0}) {
            auto f = [&](double v) {
                double x = 50.0 * std::exp(-v);
                return Complex(pdf_series(g, s * x) * x);
            };
            mass += quad::decaying_tail(f, 0.0, tol).value.real();
        }
        return Outcome{mass >= 0.95 && mass <= 1.0, fmt("mass %.6f", mass)};
    });

    report("9", "hermitian symmetry on 100 random cases, residue bridge", 5, [] {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        auto specs = catalog();
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const auto& spec = specs[i % specs.size()];
            auto strip = working_strip(spec);
            double hi = std::min({strip.hi, spec.moment_strip.hi, 1.5});
            double rho = strip.lo + (hi - strip.lo) * (0.1 + 0.8 * u(rng));
            GridParams p{rho, 0.2 + 0.4 * u(rng), 1 + static_cast<int>(20 * u(rng)), u(rng) < 0.5 ? Sign::minus : Sign::plus};
            auto g = make_grid(spec, p, Method::closed_form);
            double theta = std::exp(6 * u(rng) - 3);
            Complex a = cf_series(g, theta);
            worst = std::max(worst, std::abs(a - std::conj(cf_series(g, -theta))) / std::max(1.0, std::abs(a)));
        }
        double bridge = std::abs(residue_partial_sum(1.0, 6) - std::exp(-0.5));
        return Outcome{worst <= 1e-10 && bridge <= 1e-4,
                       fmt("hermitian worst %.3g", worst) + fmt(", |residue sum - e^-1/2| %.3g", bridge)};
    });

    report("10", "complex gamma vs oracle 1e-12, recurrence and reflection 1e-10", 5, [] {
        double oracle = 0.0;
        for (const auto& c : golden::kGammaGrid) oracle = std::max(oracle, rel(complex_gamma(c.z), c.value));
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> re(0.1, 5.0), im(-10.0, 10.0);
        double rec = 0.0, refl = 0.0, conj = 0.0;
        for (int i = 0; i < 100; ++i) {
            Complex z{re(rng), im(rng)};
            rec = std::max(rec, rel(z * complex_gamma(z), complex_gamma(z + 1.0)));
            refl = std::max(refl, rel(complex_gamma(z) * complex_gamma(1.0 - z), kPi / std::sin(kPi * z)));
            Complex a = complex_gamma(std::conj(z)), b = std::conj(complex_gamma(z));
            conj = std::max(conj, std::abs(a - b) / std::abs(b));
        }
        return Outcome{oracle <= 1e-12 && rec <= 1e-10 && refl <= 1e-10 && conj <= 1e-14,
                       fmt("oracle %.3g", oracle) + fmt(", recurrence %.3g", rec) + fmt(", reflection %.3g", refl) +
                           fmt(", conjugation %.3g", conj)};
    });

    report("11", "composition I^0.2 I^0.2 = I^0.4 on the gaussian cf, dev <= 1e-6", 5, [] {
        auto cf = characteristic_function(DistributionSpec::gaussian(0.0, 1.0));
        auto r = composition_check(0.2, 0.2, cf.value);
        return Outcome{r.max_deviation <= 1e-6, fmt("deviation %.3g", r.max_deviation)};
    });

    std::printf("%d criterion line(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
