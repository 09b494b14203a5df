#include "eigengap/lemmas.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eigengap/quadrature.hpp"
#include "eigengap/special_functions.hpp"

namespace eigengap {
namespace {

constexpr double kPi = std::numbers::pi;

struct Extreme {
    double value = -std::numeric_limits<double>::infinity();
    double t = 0.0;

    void feed(double v, double at) {
        if (v > value) {
            value = v;
            t = at;
        }
    }
};

void require_tol(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

}  // namespace

std::vector<double> GridSpec::points() const {
    if (count < 2) throw std::invalid_argument("grid needs at least 2 points");
    if (endpoint_exclusion < 0.0)
        throw std::invalid_argument("endpoint exclusion must be >= 0");
    const double lo = -kHalfPi + endpoint_exclusion;
    const double hi = kHalfPi - endpoint_exclusion;
    if (!(lo < hi)) throw std::invalid_argument("exclusion leaves empty grid");
    std::vector<double> ts(static_cast<std::size_t>(count));
    if (spacing == Spacing::uniform) {
        const double h = (hi - lo) / (count - 1);
        for (int i = 0; i < count; ++i) ts[i] = lo + h * i;
    } else {
        // Chebyshev-Lobatto points, increasing in t.
        for (int i = 0; i < count; ++i) {
            const double x = std::cos(kPi * (count - 1 - i) / (count - 1));
            ts[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * x;
        }
    }
    ts.front() = lo;
    ts.back() = hi;
    return ts;
}

std::vector<CheckResult> verify_xi_lemma(const GridSpec& grid, double tol) {
    require_tol(tol);
    const auto ts = grid.points();
    const auto end = endpoint_constants();

    Extreme ode, ode1, qode, neg_left, pos_right, convex, third_sign,
        slope_bounds, slope_monotone, range;
    for (double t : ts) {
        const Jet3 j = xi_jet(t);
        const double s = std::sin(t), co = std::cos(t);
        // (1/2) xi'' cos^2 - xi' cos sin - xi = 2 cos^2
        ode.feed(std::fabs(0.5 * j.f2 * co * co - j.f1 * co * s - j.f -
                           2.0 * co * co),
                 t);
        // xi' cos - 2 xi sin = 4 t cos
        ode1.feed(std::fabs(j.f1 * co - 2.0 * j.f * s - 4.0 * t * co), t);
        // (1/2) xi''' cos - 2 xi'' sin - 2 xi' cos = -4 sin
        qode.feed(std::fabs(0.5 * j.f3 * co - 2.0 * j.f2 * s - 2.0 * j.f1 * co +
                            4.0 * s),
                  t);
        if (t < 0.0 && t > -kHalfPi) neg_left.feed(j.f1, t);
        if (t > 0.0 && t < kHalfPi) pos_right.feed(-j.f1, t);
        convex.feed(-j.f2, t);
        if (t < 0.0 && t > -kHalfPi) third_sign.feed(j.f3, t);
        if (t > 0.0 && t < kHalfPi) third_sign.feed(-j.f3, t);
        const double ratio = (t == 0.0) ? j.f2 : j.f1 / t;
        slope_bounds.feed(end.xi2_at_zero - ratio, t);
        slope_bounds.feed(ratio - 4.0 / 3.0, t);
        // monotonicity of xi'/t via h(t) = xi'' t - xi' > 0 on (0, pi/2)
        if (t > 0.0 && t < kHalfPi) slope_monotone.feed(j.f1 - j.f2 * t, t);
        range.feed(end.xi_at_zero - j.f, t);
        range.feed(j.f, t);
    }

    Extreme ep;
    ep.feed(std::fabs(xi_jet(0.0).f - end.xi_at_zero), 0.0);
    ep.feed(std::fabs(xi_jet(0.0).f2 - end.xi2_at_zero), 0.0);
    for (double sgn : {-1.0, 1.0}) {
        const Jet3 j = xi_jet(sgn * kHalfPi);
        ep.feed(std::fabs(j.f), j.t);
        ep.feed(std::fabs(j.f1 - sgn * end.xi1_at_end), j.t);
        ep.feed(std::fabs(j.f2 - end.xi2_at_end), j.t);
        ep.feed(std::fabs(j.f3 - sgn * end.xi3_at_end), j.t);
    }

    std::vector<CheckResult> out;
    out.push_back(make_check("xi.ode", "xi-eq", ode.value, tol, ode.t));
    out.push_back(make_check("xi.ode1", "xi-eq2", ode1.value, tol, ode1.t));
    out.push_back(make_check("xi.q_ode", "q-eq", qode.value, tol, qode.t));
    out.push_back(make_check("xi.slope_neg_left", "xi'(t)<0 on (-pi/2,0)",
                             neg_left.value, tol, neg_left.t));
    out.push_back(make_check("xi.slope_pos_right", "xi'(t)>0 on (0,pi/2)",
                             pos_right.value, tol, pos_right.t));
    out.push_back(make_check("xi.convex", "xi''(t)>0", convex.value, tol,
                             convex.t));
    out.push_back(make_check("xi.third_sign", "xi'''<0 left, >0 right",
                             third_sign.value, tol, third_sign.t));
    out.push_back(make_check("xi.slope_ratio_bounds",
                             "2(3-pi^2/4) <= xi'(t)/t <= 4/3",
                             slope_bounds.value, tol, slope_bounds.t));
    out.push_back(make_check("xi.slope_ratio_monotone",
                             "(xi'(t)/t)' > 0 on (0,pi/2)",
                             slope_monotone.value, tol, slope_monotone.t));
    out.push_back(make_check("xi.range", "1-pi^2/4 <= xi <= 0", range.value,
                             tol, range.t));
    out.push_back(make_check("xi.endpoints", "Lemma on xi, endpoint values",
                             ep.value, tol, ep.t));
    return out;
}

std::vector<CheckResult> verify_eta_lemma(const GridSpec& grid, double tol) {
    require_tol(tol);
    const auto ts = grid.points();
    const auto end = endpoint_constants();

    Extreme ode, ode1, pode, range, d1_bounds, d2_bounds, d3_pos;
    for (double t : ts) {
        const Jet3 j = eta_jet(t);
        const double s = std::sin(t), co = std::cos(t);
        // (1/2) eta'' cos^2 - eta' cos sin - eta = -sin
        ode.feed(std::fabs(0.5 * j.f2 * co * co - j.f1 * co * s - j.f + s), t);
        // eta' cos - 2 eta sin = (8/pi) cos - 2
        ode1.feed(std::fabs(j.f1 * co - 2.0 * j.f * s - 8.0 / kPi * co + 2.0),
                  t);
        // (1/2) eta''' cos - 2 eta'' sin - 2 eta' cos = -1
        pode.feed(std::fabs(0.5 * j.f3 * co - 2.0 * j.f2 * s - 2.0 * j.f1 * co +
                            1.0),
                  t);
        range.feed(std::fabs(j.f) - 1.0, t);
        d1_bounds.feed(end.eta1_at_zero - j.f1, t);
        d1_bounds.feed(j.f1 - end.eta1_at_end, t);
        d2_bounds.feed(std::fabs(j.f2) - 0.5, t);
        d3_pos.feed(-j.f3, t);
    }

    Extreme ep;
    ep.feed(std::fabs(eta_jet(0.0).f), 0.0);
    ep.feed(std::fabs(eta_jet(0.0).f1 - end.eta1_at_zero), 0.0);
    for (double sgn : {-1.0, 1.0}) {
        const Jet3 j = eta_jet(sgn * kHalfPi);
        ep.feed(std::fabs(j.f - sgn * end.eta_at_end), j.t);
        ep.feed(std::fabs(j.f1 - end.eta1_at_end), j.t);
        ep.feed(std::fabs(j.f2 - sgn * end.eta2_at_end), j.t);
        ep.feed(std::fabs(j.f3 - end.eta3_at_end), j.t);
    }

    std::vector<CheckResult> out;
    out.push_back(make_check("eta.ode", "eta-eq", ode.value, tol, ode.t));
    out.push_back(make_check("eta.ode1", "eta-eq2", ode1.value, tol, ode1.t));
    out.push_back(make_check("eta.p_ode", "p-eq", pode.value, tol, pode.t));
    out.push_back(make_check("eta.range", "-1 <= eta <= 1", range.value, tol,
                             range.t));
    out.push_back(make_check("eta.d1_bounds", "2(4/pi-1) <= eta' <= 8/(3pi)",
                             d1_bounds.value, tol, d1_bounds.t));
    out.push_back(make_check("eta.d2_bounds", "-1/2 <= eta'' <= 1/2",
                             d2_bounds.value, tol, d2_bounds.t));
    out.push_back(make_check("eta.d3_positive", "eta'''(t) > 0", d3_pos.value,
                             tol, d3_pos.t));
    out.push_back(make_check("eta.endpoints", "Lemma on eta, endpoint values",
                             ep.value, tol, ep.t));
    return out;
}

std::vector<CheckResult> verify_r_lemma(const GridSpec& grid, double tol) {
    require_tol(tol);
    const auto ts = grid.points();
    const auto end = endpoint_constants();
    const double h = 1e-5;

    Extreme increasing, abs_bound;
    for (double t : ts) {
        const double lo = std::max(t - h, -kHalfPi);
        const double hi = std::min(t + h, kHalfPi);
        const double slope = (ratio_r(hi) - ratio_r(lo)) / (hi - lo);
        increasing.feed(-slope, t);
        abs_bound.feed(std::fabs(ratio_r(t)) - end.r_at_end, t);
    }

    Extreme ep;
    ep.feed(std::fabs(ratio_r(kHalfPi) - end.r_at_end), kHalfPi);
    ep.feed(std::fabs(ratio_r(-kHalfPi) + end.r_at_end), -kHalfPi);

    // One-sided second-order estimate of r'(pi/2-) via Richardson.
    const double h2 = 1e-4;
    auto slope_at = [&](double step) {
        return (ratio_r(kHalfPi) - ratio_r(kHalfPi - step)) / step;
    };
    const double r1 = 2.0 * slope_at(h2 / 2.0) - slope_at(h2);
    Extreme limit;
    limit.feed(std::fabs(r1 - end.r1_at_end), kHalfPi);

    std::vector<CheckResult> out;
    out.push_back(make_check("r.increasing", "r'(t) > 0", increasing.value,
                             tol, increasing.t));
    out.push_back(make_check("r.abs_bound", "|r(t)| <= pi^2/4", abs_bound.value,
                             tol, abs_bound.t));
    out.push_back(make_check("r.endpoints", "r(+-pi/2) = +-pi^2/4", ep.value,
                             tol, ep.t));
    out.push_back(make_check("r.d1_limit",
                             "r'(pi/2-) = (4/(3pi)-pi/12)/(4/(3pi))^2",
                             limit.value, 1e-6, kHalfPi));
    return out;
}

std::vector<CheckResult> verify_integrals(double tol) {
    require_tol(tol);
    const auto xi_int = integrate([](double t) { return xi_jet(t).f; },
                                  -kHalfPi, kHalfPi);
    const auto eta_int = integrate([](double t) { return eta_jet(t).f; },
                                   -kHalfPi, kHalfPi);
    const double c = 0.3, m = 0.1;
    const auto z_int = integrate(
        [&](double t) { return 1.0 + c * eta_jet(t).f + m * xi_jet(t).f; },
        -kHalfPi, kHalfPi);

    auto result = [&](const char* id, const char* anchor, const QuadResult& q,
                      double expected) {
        const double viol = q.converged
                                ? std::fabs(q.value - expected)
                                : std::numeric_limits<double>::infinity();
        return make_check(id, anchor, viol, tol, 0.0);
    };
    std::vector<CheckResult> out;
    out.push_back(result("int.xi", "xi-int", xi_int, -kPi));
    out.push_back(result("int.eta", "int eta = 0 (odd)", eta_int, 0.0));
    out.push_back(result("int.z_sample", "int z = (1-m) pi", z_int,
                         (1.0 - m) * kPi));
    return out;
}

std::vector<CheckResult> verify_all_lemmas(const GridSpec& grid, double tol) {
    std::vector<CheckResult> out = verify_xi_lemma(grid, tol);
    for (auto&& c : verify_eta_lemma(grid, tol)) out.push_back(std::move(c));
    for (auto&& c : verify_r_lemma(grid, tol)) out.push_back(std::move(c));
    for (auto&& c : verify_integrals(std::min(tol, 1e-10)))
        out.push_back(std::move(c));
    return out;
}

}  // namespace eigengap
