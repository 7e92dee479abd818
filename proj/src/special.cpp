#include "fracmom/special.hpp"

#include <array>
#include <cmath>

#include "fracmom/errors.hpp"

namespace fracmom {

namespace {

constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};

Complex lanczos_log_gamma(Complex z) {
    Complex y = z;
    Complex tmp = z + 5.24218750000000000;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    Complex ser = 0.999999999999997092;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / z);
}

bool near_nonpositive_integer(Complex z) {
    double n = std::round(z.real());
    return n <= 0.0 && std::abs(z - Complex(n, 0.0)) < kPoleTolerance;
}

}  // namespace

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma: non-finite argument");
    if (near_nonpositive_integer(z))
        throw PoleError("Gamma has a pole at z = " + std::to_string(std::round(z.real())));
    if (z.real() < 0.5) {
        return std::log(kPi) - std::log(std::sin(kPi * z)) - lanczos_log_gamma(1.0 - z);
    }
    return lanczos_log_gamma(z);
}

Complex complex_gamma(Complex z) {
    if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 171.0) {
        return {std::tgamma(z.real()), 0.0};
    }
    return std::exp(log_gamma(z));
}

Complex signed_pow(double x, Complex g, Sign sign) {
    if (x == 0.0) throw DomainError("signed_pow: x = 0 is outside the domain");
    double s = x > 0.0 ? 1.0 : -1.0;
    double turn = sign == Sign::minus ? -s : s;
    return std::exp(g * std::log(std::abs(x)) + g * Complex(0.0, turn * kPi / 2.0));
}

Complex i_pow(Complex g) { return std::exp(Complex(0.0, kPi / 2.0) * g); }

Complex reflection_product(Complex g) {
    double n = std::round(g.real());
    if (std::abs(g - Complex(n, 0.0)) < kPoleTolerance)
        throw PoleError("reflection_product: integer argument");
    return kPi / std::sin(kPi * g);
}

}  // namespace fracmom
