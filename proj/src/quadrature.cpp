#include "fracmom/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "fracmom/errors.hpp"

namespace fracmom::quad {

namespace {

constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};

constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Piece {
    double a, b;
    Result r;
    bool operator<(const Piece& o) const { return r.error < o.r.error; }
};

}  // namespace

Result kronrod15(const Integrand& f, double a, double b) {
    double centre = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    Complex fc = f(centre);
    Complex kron = fc * wgk[7];
    Complex gauss = fc * wg[3];
    double resabs = std::abs(fc) * wgk[7];
    for (int j = 0; j < 7; ++j) {
        double dx = half * xgk[j];
        Complex f1 = f(centre - dx);
        Complex f2 = f(centre + dx);
        kron += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
    }
    Result r;
    r.value = kron * half;
    r.abs_value = resabs * std::abs(half);
    double diff = std::abs((kron - gauss) * half);
    // QUADPACK-style sharpening of the raw Gauss/Kronrod difference
    r.error = diff > 0.0 ? diff * std::min(1.0, std::pow(200.0 * diff / std::max(r.abs_value, 1e-300), 1.5))
                         : 0.0;
    r.error = std::max(r.error, 50.0 * 2.2e-16 * r.abs_value);
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag())) r.error = INFINITY;
    r.evaluations = 15;
    return r;
}

Result adaptive(const Integrand& f, double a, double b, const Tolerance& tol) {
    if (a == b) return {};
    std::priority_queue<Piece> heap;
    Result first = kronrod15(f, a, b);
    heap.push({a, b, first});
    Complex total = first.value;
    double err = first.error;
    double absval = first.abs_value;
    int evals = first.evaluations;
    int intervals = 1;
    while (err > std::max(tol.abs, tol.rel * std::abs(total))) {
        if (intervals >= tol.max_intervals)
            throw QuadratureError("adaptive quadrature hit the subdivision cap", err);
        Piece worst = heap.top();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b)) ||
            std::abs(worst.b - worst.a) < 1e-15 * std::max(std::abs(worst.a), std::abs(worst.b))) {
            if (std::isfinite(err) && err <= 1e3 * std::max(tol.abs, tol.rel * std::abs(total))) break;
            throw QuadratureError("adaptive quadrature cannot subdivide further", err);
        }
        heap.pop();
        Result left = kronrod15(f, worst.a, mid);
        Result right = kronrod15(f, mid, worst.b);
        total += left.value + right.value - worst.r.value;
        err += left.error + right.error - worst.r.error;
        absval += left.abs_value + right.abs_value - worst.r.abs_value;
        evals += 30;
        ++intervals;
        heap.push({worst.a, mid, left});
        heap.push({mid, worst.b, right});
        if (intervals % 64 == 0) {
            // refresh the running sums to shed accumulated cancellation
            std::priority_queue<Piece> copy = heap;
            total = 0.0;
            err = 0.0;
            absval = 0.0;
            while (!copy.empty()) {
                total += copy.top().r.value;
                err += copy.top().r.error;
                absval += copy.top().r.abs_value;
                copy.pop();
            }
        }
    }
    return {total, err, absval, evals};
}

Result decaying_tail(const Integrand& f, double a, const Tolerance& tol, double chunk, double limit) {
    Result out;
    double prev_abs = INFINITY;
    Tolerance piece_tol = tol;
    for (double lo = a; lo < a + limit; lo += chunk) {
        Result r = adaptive(f, lo, lo + chunk, piece_tol);
        out.value += r.value;
        out.error += r.error;
        out.abs_value += r.abs_value;
        out.evaluations += r.evaluations;
        double target = std::max(tol.abs, tol.rel * std::abs(out.value));
        piece_tol.abs = std::max(tol.abs, 0.1 * target);
        if (r.abs_value < target) {
            double ratio = prev_abs > 0.0 && std::isfinite(prev_abs) ? r.abs_value / prev_abs : 1.0;
            double tail = ratio < 0.9 ? r.abs_value * ratio / (1.0 - ratio) : INFINITY;
            if (r.abs_value == 0.0 || tail < target) {
                out.error += tail == INFINITY ? 0.0 : tail;
                return out;
            }
        }
        prev_abs = r.abs_value;
    }
    throw QuadratureError("integrand did not decay on the half line", prev_abs);
}

}  // namespace fracmom::quad
