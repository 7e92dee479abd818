#pragma once

#include <functional>
#include <vector>

#include "fracmom/distributions.hpp"
#include "fracmom/special.hpp"

namespace fracmom {

// plus: operators built on f(x - xi); minus: on f(x + xi)
enum class Side { plus, minus };

enum class OperatorKind { RLIntegralPlus, RLIntegralMinus, MarchaudPlus, MarchaudMinus, RieszDerivative, RieszIntegral };

using ComplexFunction = std::function<Complex(double)>;

struct CharacteristicFunction {
    ComplexFunction value;
    ComplexFunction complement;  // 1 - value; optional

    Complex operator()(double theta) const { return value(theta); }
    Complex one_minus(double theta) const;
};

CharacteristicFunction characteristic_function(const DistributionSpec& spec);

// Sign of the moment produced by the operator on `side` applied to a CF at zero.
inline Sign moment_sign(Side side) { return side == Side::plus ? Sign::plus : Sign::minus; }

// (I^g f)(0) = Gamma(g)^-1 integral_0^inf xi^(g-1) f(-+xi) dxi
Complex rl_integral_at_zero(const ComplexFunction& f, Complex g, Side side);

// Weyl-type integral at an arbitrary point x
Complex weyl_integral(const ComplexFunction& f, Complex g, Side side, double x);

// g / Gamma(1 - g) integral_0^inf (cf(0) - cf(-+xi)) xi^(-1-g) dxi, 0 < Re g < 1
Complex marchaud_derivative_at_zero(const CharacteristicFunction& cf, Complex g, Side side);

Complex riesz_derivative_at_zero(const CharacteristicFunction& cf, Complex g);
Complex riesz_integral_at_zero(const ComplexFunction& f, Complex g);

// integral_0^inf xi^(g-1) f(+-xi) dxi
Complex mellin_forward(const ComplexFunction& f, Complex g, Side side);

struct CompositionReport {
    std::vector<double> points;
    std::vector<Complex> nested;
    std::vector<Complex> direct;
    double max_deviation = 0.0;
};

CompositionReport composition_check(Complex g1, Complex g2, const ComplexFunction& f,
                                    const std::vector<double>& points = {0.0}, Side side = Side::plus);

}  // namespace fracmom
