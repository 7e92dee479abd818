#pragma once

#include <functional>

#include "fracmom/special.hpp"

namespace fracmom::quad {

using Integrand = std::function<Complex(double)>;

struct Result {
    Complex value;
    double error = 0.0;
    double abs_value = 0.0;  // integral of |f|, used for tail tests
    int evaluations = 0;
};

struct Tolerance {
    double abs = 1e-13;
    double rel = 1e-12;
    int max_intervals = 4000;
};

// 15-point Kronrod rule on a single interval, error from the embedded 7-point Gauss rule.
Result kronrod15(const Integrand& f, double a, double b);

// Globally adaptive Gauss-Kronrod on a finite interval. Throws QuadratureError.
Result adaptive(const Integrand& f, double a, double b, const Tolerance& tol = {});

// Integral over [a, inf) for integrands that eventually decay at least geometrically,
// summed over chunks of fixed width until the tail is negligible.
Result decaying_tail(const Integrand& f, double a, const Tolerance& tol = {}, double chunk = 4.0,
                     double limit = 700.0);

}  // namespace fracmom::quad
