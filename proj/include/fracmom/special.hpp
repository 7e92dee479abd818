#pragma once

#include <complex>

namespace fracmom {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kPoleTolerance = 1e-12;

// gamma = rho + i*eta
struct ComplexOrder {
    double rho = 0.0;
    double eta = 0.0;

    constexpr Complex value() const { return {rho, eta}; }
    static constexpr ComplexOrder from(Complex z) { return {z.real(), z.imag()}; }
};

// minus selects (-ix)^g, plus selects (+ix)^g
enum class Sign { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

Complex log_gamma(Complex z);
Complex complex_gamma(Complex z);

// (-ix)^g or (+ix)^g as exp(g ln|x| -+ g*pi*i/2 sgn x); x = 0 throws DomainError.
Complex signed_pow(double x, Complex g, Sign sign);

// i^g = exp(i*pi*g/2)
Complex i_pow(Complex g);

// Gamma(g) Gamma(1-g) = pi / sin(pi g)
Complex reflection_product(Complex g);

}  // namespace fracmom
