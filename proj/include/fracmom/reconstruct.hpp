#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fracmom/distributions.hpp"
#include "fracmom/moments.hpp"

namespace fracmom {

// (delta / 2 pi) sum_k Gamma(g_k) E_k |theta|^(-g_k); the conjugate is taken when the
// grid sign belongs to the other half line. DomainError at theta = 0.
Complex cf_series(const MomentGrid& grid, double theta);

// Same, but returns 1 at theta = 0.
Complex cf_value(const MomentGrid& grid, double theta);

// Complex sum before the real-part projection; needs a Sign::minus grid.
Complex pdf_series_sum(const MomentGrid& grid, double x);
double pdf_series(const MomentGrid& grid, double x);

Complex classical_taylor_cf(const DistributionSpec& spec, double theta, int order);

// Residues of the standard Gaussian Mellin integrand at gamma = 0, -2, -4, ...
Complex residue_partial_sum(double theta, int terms);

enum class CurveKind { cf, pdf };

struct CurveResult {
    CurveKind kind = CurveKind::cf;
    GridParams params;
    std::vector<double> abscissae;
    std::vector<Complex> values;
    std::optional<std::vector<Complex>> exact;
    std::optional<std::vector<double>> abs_err;
    double max_imag_residual = 0.0;  // pdf only: largest |Im| of the sum before projection

    double max_abs_err() const;
};

CurveResult sample_curve(const MomentGrid& grid, CurveKind kind, std::span<const double> abscissae,
                         const DistributionSpec* exact = nullptr);

}  // namespace fracmom
