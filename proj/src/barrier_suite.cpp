#include <cmath>
#include <limits>
#include <random>

#include "eigengap/barrier.hpp"
#include "eigengap/bounds.hpp"

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

}  // namespace

std::vector<CheckResult> verify_barrier(int num_specs, int points_per_spec,
                                        double tol) {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> draw_c(0.0, 0.9);
    std::uniform_real_distribution<double> draw_m(-0.4, 0.4);

    // Residual of the combination equation for random (c, m).
    Extreme residual;
    for (int spec_ix = 0; spec_ix < num_specs; ++spec_ix) {
        TestFunctionSpec spec;
        spec.kind = TestFunctionKind::mu_combination;
        spec.c = draw_c(rng);
        spec.m = draw_m(rng);
        for (int i = 0; i < points_per_spec; ++i) {
            const double t = -kHalfPi + kPi * (i + 0.5) / points_per_spec;
            residual.feed(std::fabs(z_equation_residual(spec, t)), t);
        }
    }

    // Dropped correction term of corollary 1: z' >= 0 and
    // 1-c <= z <= 1+c force it nonnegative.
    Extreme cor1_drop;
    std::uniform_real_distribution<double> draw_t(-kHalfPi + 0.01,
                                                  kHalfPi - 0.01);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 4000; ++i) {
        BarrierPoint p;
        p.t0 = draw_t(rng);
        p.c = draw_c(rng);
        p.z = 1.0 - p.c + 2.0 * p.c * unit(rng);
        p.z1 = 2.0 * unit(rng);
        p.z2 = 4.0 * unit(rng) - 2.0;
        p.delta = 0.5 * unit(rng);
        const auto res = corollary_rhs(p, Corollary::cor1);
        cor1_drop.feed(-res.dropped_term, p.t0);
    }

    // Same for corollary 2 (a = 0, z' sin t >= 0, z <= 1).
    Extreme cor2_drop;
    for (int i = 0; i < 4000; ++i) {
        BarrierPoint p;
        p.t0 = draw_t(rng);
        p.c = 0.0;
        p.z = 0.2 + 0.8 * unit(rng);
        const double mag = 2.0 * unit(rng);
        p.z1 = (p.t0 >= 0.0) ? mag : -mag;
        p.z2 = 4.0 * unit(rng) - 2.0;
        p.delta = 0.5 * unit(rng);
        const auto res = corollary_rhs(p, Corollary::cor2);
        cor2_drop.feed(-res.dropped_term, p.t0);
    }

    // Corollary shadow: z = 1 + c eta + m xi satisfies the combination
    // equation, so the simplified right-hand side collapses to
    // 2 (m - delta) cos^2 t, nonpositive whenever delta >= m.
    Extreme shadow;
    for (int i = 0; i < 2000; ++i) {
        TestFunctionSpec spec;
        spec.c = draw_c(rng);
        spec.m = 0.4 * unit(rng);
        const double delta = spec.m + 0.1 * unit(rng);
        const double t = draw_t(rng);
        const Jet3 z = test_function_jet(spec, t);
        const double s = std::sin(t), co = std::cos(t);
        const double rhs = 0.5 * z.f2 * co * co - z.f1 * co * s - z.f + 1.0 +
                           spec.c * s - 2.0 * delta * co * co;
        shadow.feed(rhs, t);
    }

    // Taylor lower bound for min z against direct grid minimization.
    Extreme min_bound;
    {
        const int grid = 100000;
        for (double delta : {0.1, 0.25, 0.4}) {
            for (double frac : {0.2, 0.6, 0.95}) {
                const double c = frac * 1.53 * delta;
                if (!(c > 0.0 && c < 0.765)) continue;
                const double bound = z_min_bound(c, delta);
                double zmin = std::numeric_limits<double>::infinity();
                double at = 0.0;
                for (int i = 0; i <= grid; ++i) {
                    const double t = -kHalfPi + kPi * i / grid;
                    const double z = 1.0 + c * eta_jet(t).f +
                                     delta * xi_jet(t).f;
                    if (z < zmin) {
                        zmin = z;
                        at = t;
                    }
                }
                min_bound.feed(bound - zmin, at);
            }
        }
    }

    // z' > 0 on the whole interval whenever c/m > pi^2/4.
    Extreme slope;
    for (int i = 0; i < 200; ++i) {
        TestFunctionSpec spec;
        spec.m = 0.01 + 0.3 * unit(rng);
        spec.c = spec.m * (kPi * kPi / 4.0) * (1.0 + 0.05 + unit(rng));
        for (int g = 0; g <= 400; ++g) {
            const double t = -kHalfPi + kPi * g / 400;
            slope.feed(-test_function_jet(spec, t).f1, t);
        }
    }

    // eta-only combination stays inside [1-c, 1+c].
    Extreme envelope;
    for (double c : {0.1, 0.5, 0.9}) {
        TestFunctionSpec spec;
        spec.kind = TestFunctionKind::eta_only;
        spec.c = c;
        for (int g = 0; g <= 2000; ++g) {
            const double t = -kHalfPi + kPi * g / 2000;
            const double z = test_function_jet(spec, t).f;
            envelope.feed(z - (1.0 + c), t);
            envelope.feed((1.0 - c) - z, t);
        }
    }

    std::vector<CheckResult> out;
    out.push_back(make_check("barrier.z_equation_residual", "z-eq",
                             residual.value, tol, residual.t));
    out.push_back(make_check("barrier.cor1_dropped_term",
                             "corollary 1 correction >= 0", cor1_drop.value,
                             1e-12, cor1_drop.t));
    out.push_back(make_check("barrier.cor2_dropped_term",
                             "corollary 2 correction >= 0", cor2_drop.value,
                             1e-12, cor2_drop.t));
    out.push_back(make_check("barrier.contradiction_shadow",
                             "simplified rhs <= 0 when delta >= m",
                             shadow.value, 1e-12, shadow.t));
    out.push_back(make_check("barrier.z_min_taylor_bound",
                             "grid min z >= Taylor bound", min_bound.value,
                             1e-12, min_bound.t));
    out.push_back(make_check("barrier.slope_positive",
                             "z' > 0 when c/m > pi^2/4", slope.value, 1e-12,
                             slope.t));
    out.push_back(make_check("barrier.eta_envelope", "z-endpts",
                             envelope.value, 1e-12, envelope.t));
    return out;
}

}  // namespace eigengap
