#include "fracmom/identities.hpp"

#include <cmath>

#include "fracmom/errors.hpp"
#include "fracmom/fracops.hpp"

namespace fracmom {

namespace {

template <class Op, class Ref>
IdentityCheck run_check(std::string identity, std::string side, Complex g, double tol, Op op, Ref ref) {
    IdentityCheck c;
    c.identity = std::move(identity);
    c.side = std::move(side);
    c.gamma = g;
    c.tolerance = tol;
    try {
        c.moment_value = ref();
        c.operator_value = op();
        c.rel_deviation = std::abs(c.operator_value - c.moment_value) / std::abs(c.moment_value);
        c.passed = c.rel_deviation <= tol;
    } catch (const Error& e) {
        c.error = e.what();
        c.rel_deviation = kInf;
    }
    return c;
}

}  // namespace

std::vector<IdentityCheck> identity_suite(const DistributionSpec& spec, double rho, double delta, int m,
                                          double tolerance) {
    std::vector<IdentityCheck> out;
    CharacteristicFunction cf = characteristic_function(spec);
    Density pdf = [&spec](double x) { return exact_pdf(spec, x); };
    Interval supp = support(spec);

    for (int k = -m; k <= m; ++k) {
        Complex g{rho, k * delta};
        for (Side side : {Side::plus, Side::minus}) {
            std::string name = side == Side::plus ? "plus" : "minus";
            Sign sign = moment_sign(side);
            if (spec.moment_strip.contains(rho))
                out.push_back(run_check("rl", name, g, tolerance,
                                        [&] { return rl_integral_at_zero(cf.value, g, side); },
                                        [&] { return moment_quadrature(pdf, supp, g, sign); }));
            if (spec.moment_strip.contains(-rho) && rho > 0.0 && rho < 1.0)
                out.push_back(run_check(
                    "marchaud", name, g, tolerance, [&] { return marchaud_derivative_at_zero(cf, g, side); },
                    [&] { return power_expectation(pdf, supp, g, PowerKernel::signed_power, sign); }));
        }
    }
    for (double r : {0.25, 0.5, 0.75}) {
        Complex g{r, 0.0};
        if (spec.moment_strip.contains(-r))
            out.push_back(run_check("riesz-derivative", "both", g, tolerance,
                                    [&] { return -riesz_derivative_at_zero(cf, g); },
                                    [&] { return power_expectation(pdf, supp, g, PowerKernel::absolute); }));
        if (spec.moment_strip.contains(r))
            out.push_back(run_check("riesz-integral", "both", g, tolerance,
                                    [&] { return riesz_integral_at_zero(cf.value, g); },
                                    [&] { return power_expectation(pdf, supp, -g, PowerKernel::absolute); }));
    }
    return out;
}

}  // namespace fracmom
