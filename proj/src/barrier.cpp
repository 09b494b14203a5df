#include "eigengap/barrier.hpp"

#include <cmath>
#include <stdexcept>

namespace eigengap {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSlack = 1e-9;

double simplified_rhs(const BarrierPoint& p) {
    const double s = std::sin(p.t0), co = std::cos(p.t0);
    return 0.5 * p.z2 * co * co - p.z1 * co * s - p.z + 1.0 + p.c * s -
           2.0 * p.delta * co * co;
}

double correction_term(const BarrierPoint& p) {
    const double s = std::sin(p.t0), co = std::cos(p.t0);
    return p.z1 / (4.0 * p.z) * co *
           (p.z1 * co - 2.0 * p.z * s + 2.0 * s + 2.0 * p.c);
}

}  // namespace

double barrier_rhs(const BarrierPoint& p) {
    if (!(p.z > 0.0)) throw std::invalid_argument("barrier requires z > 0");
    return simplified_rhs(p) - correction_term(p);
}

CorollaryRhs corollary_rhs(const BarrierPoint& p, Corollary which) {
    if (!(p.z > 0.0)) throw std::invalid_argument("barrier requires z > 0");
    if (which == Corollary::cor1) {
        if (p.z1 < -kSlack)
            throw std::invalid_argument("corollary 1 requires z'(t0) >= 0");
        if (p.z < 1.0 - p.c - kSlack || p.z > 1.0 + p.c + kSlack)
            throw std::invalid_argument(
                "corollary 1 requires 1-c <= z(t0) <= 1+c");
    } else {
        if (p.c != 0.0)
            throw std::invalid_argument("corollary 2 requires a = 0");
        if (p.z1 * std::sin(p.t0) < -kSlack)
            throw std::invalid_argument(
                "corollary 2 requires z'(t0) sin t0 >= 0");
        if (p.z > 1.0 + kSlack)
            throw std::invalid_argument("corollary 2 requires z(t0) <= 1");
    }
    CorollaryRhs out;
    out.rhs = simplified_rhs(p);
    out.dropped_term = correction_term(p);
    return out;
}

Jet3 test_function_jet(const TestFunctionSpec& spec, double t) {
    if (!std::isfinite(spec.c) || !std::isfinite(spec.m))
        throw std::invalid_argument("test function coefficients must be finite");
    const Jet3 e = eta_jet(t);
    const Jet3 x = xi_jet(t);
    Jet3 z{};
    z.t = t;
    z.f = 1.0 + spec.c * e.f + spec.m * x.f;
    z.f1 = spec.c * e.f1 + spec.m * x.f1;
    z.f2 = spec.c * e.f2 + spec.m * x.f2;
    z.f3 = spec.c * e.f3 + spec.m * x.f3;
    return z;
}

double z_equation_residual(const TestFunctionSpec& spec, double t) {
    const Jet3 z = test_function_jet(spec, t);
    const double s = std::sin(t), co = std::cos(t);
    return 0.5 * z.f2 * co * co - z.f1 * co * s - z.f -
           (-1.0 - spec.c * s + 2.0 * spec.m * co * co);
}

double z_min_coefficient() {
    const double nu = 1.53, a0 = 0.765;
    const double head =
        (1.5 - kPi * kPi / 8.0 - (kPi * kPi / 32.0 - 1.0 / 6.0) * nu) / a0;
    const double e = 8.0 / (3.0 * kPi) - kPi / 4.0;
    return head - e * e / (-1.0 + (12.0 - kPi * kPi) / nu);
}

double z_min_bound(double c, double delta) {
    if (!(c > 0.0 && c < 1.53 * delta && c < 0.765 && delta <= 0.5))
        throw std::invalid_argument(
            "z_min_bound requires 0 < c < 1.53 delta, c < 0.765, delta <= 1/2");
    return z_min_coefficient() * c;
}

}  // namespace eigengap
