#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fracmom/errors.hpp"
#include "fracmom/special.hpp"
#include "golden_values.hpp"

using namespace fracmom;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(ComplexGamma, IntegerAndHalfInteger) {
    EXPECT_EQ(complex_gamma(1.0), Complex(1.0));
    EXPECT_NEAR(complex_gamma(0.5).real(), 1.7724538509055160, 1e-15);
    EXPECT_NEAR(complex_gamma({5.0, 0.0}).real(), 24.0, 1e-12);
}

TEST(ComplexGamma, MatchesEulerIntegralOracle) {
    for (const auto& c : golden::kGammaGrid) {
        EXPECT_LE(rel(complex_gamma(c.z), c.value), 1e-12) << "z = " << c.z;
    }
}

TEST(ComplexGamma, PolesAreRejected) {
    EXPECT_THROW(complex_gamma(0.0), PoleError);
    EXPECT_THROW(complex_gamma(-3.0), PoleError);
    EXPECT_THROW(complex_gamma({-2.0 + 1e-13, 0.0}), PoleError);
    EXPECT_NO_THROW(complex_gamma({-2.0 + 1e-6, 0.0}));
}

TEST(ComplexGamma, RecurrenceAndReflectionOnRandomGrid) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(0.1, 5.0), im(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        Complex z{re(rng), im(rng)};
        Complex g1 = complex_gamma(z + 1.0);
        EXPECT_LE(std::abs(g1 - z * complex_gamma(z)) / std::abs(g1), 1e-10);
        Complex lhs = complex_gamma(z) * complex_gamma(1.0 - z);
        Complex rhs = kPi / std::sin(kPi * z);
        EXPECT_LE(rel(lhs, rhs), 1e-10) << z;
    }
}

TEST(ComplexGamma, ConjugateSymmetry) {
    for (Complex z : {Complex(0.4, 3.0), Complex(2.5, -7.0), Complex(-1.3, 0.8), Complex(0.9, 10.0)}) {
        Complex a = complex_gamma(std::conj(z));
        Complex b = std::conj(complex_gamma(z));
        EXPECT_NEAR(a.real(), b.real(), 1e-14 * std::abs(b));
        EXPECT_NEAR(a.imag(), b.imag(), 1e-14 * std::abs(b));
    }
}

TEST(SignedPow, HalfPowerExamples) {
    Complex a = signed_pow(2.0, 0.5, Sign::minus);
    EXPECT_NEAR(a.real(), 1.0, 1e-15);
    EXPECT_NEAR(a.imag(), -1.0, 1e-15);
    Complex b = signed_pow(-2.0, 0.5, Sign::minus);
    EXPECT_NEAR(b.real(), 1.0, 1e-15);
    EXPECT_NEAR(b.imag(), 1.0, 1e-15);
}

TEST(SignedPow, ComplexOrderMatchesOracleAndPrincipalBranch) {
    Complex g{0.4, 0.4};
    Complex v = signed_pow(3.0, g, Sign::plus);
    EXPECT_LE(rel(v, golden::kSignedPowX3Plus), 1e-14);
    EXPECT_LE(rel(v, golden::kPrincipalPow3i), 1e-14);
}

TEST(SignedPow, OriginIsRejected) {
    EXPECT_THROW(signed_pow(0.0, {0.4, 0.0}, Sign::minus), DomainError);
    EXPECT_THROW(signed_pow(0.0, {-0.4, 1.0}, Sign::plus), DomainError);
}

TEST(SignedPow, ModulusAndConjugation) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(-20.0, 20.0), rhos(-2.0, 2.0), etas(-6.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        double x = xs(rng);
        Complex g{rhos(rng), etas(rng)};
        double sgn = x > 0 ? 1.0 : -1.0;
        double minus_mod = std::pow(std::abs(x), g.real()) * std::exp(kPi * g.imag() / 2.0 * sgn);
        double plus_mod = std::pow(std::abs(x), g.real()) * std::exp(-kPi * g.imag() / 2.0 * sgn);
        EXPECT_NEAR(std::abs(signed_pow(x, g, Sign::minus)) / minus_mod, 1.0, 1e-12);
        EXPECT_NEAR(std::abs(signed_pow(x, g, Sign::plus)) / plus_mod, 1.0, 1e-12);
        Complex lhs = signed_pow(x, std::conj(g), Sign::minus);
        Complex rhs = std::conj(signed_pow(x, g, Sign::plus));
        EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs));
    }
}

TEST(ReflectionProduct, KnownValues) {
    EXPECT_NEAR(reflection_product(0.5).real(), kPi, 1e-15);
    EXPECT_LE(rel(reflection_product(0.4), golden::kReflection04), 1e-13);
    EXPECT_LE(rel(complex_gamma(0.4) * complex_gamma(0.6), golden::kReflection04), 1e-12);
    Complex g{0.4, 1.0};
    EXPECT_LE(rel(reflection_product(g), golden::kReflection04p1i), 1e-13);
    EXPECT_LE(rel(complex_gamma(g) * complex_gamma(1.0 - g), golden::kReflection04p1i), 1e-12);
}

TEST(ReflectionProduct, IntegersArePoles) {
    EXPECT_THROW(reflection_product(1.0), PoleError);
    EXPECT_THROW(reflection_product(-2.0), PoleError);
}
