#pragma once

#include <cmath>

// Adaptive Gauss-Kronrod (G7,K15) quadrature on a finite interval.

namespace eigengap {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

namespace detail {

// abscissa, Gauss weight, Kronrod weight
inline constexpr double kGk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

template <class F>
double gk15(const F& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g7 = kGk15[0][1] * y0;
    double k15 = kGk15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGk15[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += kGk15[i][1] * yi;
        k15 += kGk15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    const double diff = std::fabs(g7 - k15);
    err = 200.0 * diff * std::sqrt(200.0 * diff);
    return k15;
}

template <class F>
void adapt(const F& f, double a, double b, double tol, int depth,
           QuadResult& out) {
    double err = 0.0;
    const double s = gk15(f, a, b, err);
    if (err <= tol || depth >= 48) {
        out.value += s;
        out.error += err;
        if (err > tol) out.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    adapt(f, a, mid, 0.5 * tol, depth + 1, out);
    adapt(f, mid, b, 0.5 * tol, depth + 1, out);
}

}  // namespace detail

// Integrate f over [a, b] with absolute target abs_tol.  Non-convergence
// is reported through the converged flag, never thrown.
template <class F>
QuadResult integrate(const F& f, double a, double b, double abs_tol = 1e-12) {
    QuadResult out;
    out.converged = true;
    detail::adapt(f, a, b, abs_tol, 0, out);
    return out;
}

}  // namespace eigengap
