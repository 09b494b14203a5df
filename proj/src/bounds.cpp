#include "eigengap/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eigengap/quadrature.hpp"

namespace eigengap {
namespace {

constexpr double kPi = std::numbers::pi;

void require_params(const BoundParams& p) {
    if (p.n < 2) throw std::invalid_argument("dimension n must be >= 2");
    if (!(p.K > 0.0)) throw std::invalid_argument("K must be positive");
    if (!(p.d > 0.0)) throw std::invalid_argument("diameter must be positive");
}

}  // namespace

double Constants::sigma(double c) const {
    if (!(c > 0.0)) throw std::invalid_argument("sigma requires c > 0");
    return tau / (z_min_coefficient * c);
}

double Constants::sigma_tilde(double c, double delta) const {
    const double q = kPi * kPi / 4.0 - 1.0;
    const double beta = 1.0 - c - q * delta;
    const double disc = beta * beta + 4.0 * q * tau * c * c;
    if (disc < 0.0)
        throw std::invalid_argument("sigma_tilde discriminant negative");
    return (-beta + std::sqrt(disc)) / (2.0 * q * c * c);
}

double Constants::sigma_tilde_residual(double c, double delta) const {
    const double st = sigma_tilde(c, delta);
    const double q = kPi * kPi / 4.0 - 1.0;
    return -tau + (1.0 - c) * st - q * delta * st + q * st * st * c * c;
}

Constants constants() {
    Constants k;
    k.tau = 2.0 / (3.0 * kPi * kPi) *
            (4.0 / (3.0 * (4.0 - kPi)) + 3.0 * (4.0 - kPi) / 4.0 - 2.0);
    k.mu = 1.0 - std::sqrt(kPi * kPi / (6.0 * (kPi * kPi - 4.0)) *
                           (4.0 / (3.0 * (4.0 - kPi)) +
                            3.0 * (4.0 - kPi) / 4.0 - 2.0));
    k.z_min_coefficient = z_min_coefficient();
    return k;
}

double main_bound(const BoundParams& p) {
    require_params(p);
    const double coeff = (p.n == 2) ? 3.0 / 8.0 : 31.0 / 100.0;
    return kPi * kPi / (p.d * p.d) + coeff * (p.n - 1) * p.K;
}

ClassicalBounds classical_bounds(const BoundParams& p) {
    require_params(p);
    ClassicalBounds b;
    b.lichnerowicz = p.n * p.K;
    b.zhong_yang = kPi * kPi / (p.d * p.d);
    b.yang = b.zhong_yang + 0.25 * (p.n - 1) * p.K;
    return b;
}

const char* case_label_name(CaseLabel label) {
    switch (label) {
        case CaseLabel::A_zero: return "A_zero";
        case CaseLabel::I: return "I";
        case CaseLabel::II_a: return "II_a";
        case CaseLabel::II_b_1: return "II_b_1";
        case CaseLabel::II_b_2: return "II_b_2";
        case CaseLabel::n2_mu: return "n2_mu";
    }
    return "?";
}

CaseDecision case_select(double a, double delta, int n) {
    if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
    if (!(a >= 0.0 && a < 1.0))
        throw std::invalid_argument("a must lie in [0, 1)");
    const double delta_max = (n - 1) / (2.0 * n);
    if (!(delta > 0.0 && delta <= delta_max * (1.0 + 1e-12)))
        throw std::invalid_argument("delta must lie in (0, (n-1)/(2n)]");

    CaseDecision d;
    if (a == 0.0) {
        d.label = CaseLabel::A_zero;
        d.coefficient = 0.5;
        d.applicable_theorem = "a = 0 comparison";
        return d;
    }
    if (a >= kPi * kPi / 4.0 * delta) {
        d.label = CaseLabel::I;
        d.coefficient = 0.5;
        d.applicable_theorem = "mu = 1 comparison";
        return d;
    }
    if (n == 2) {
        // (20 - pi^2)/16 > pi^2/16, so the sigma-tilde construction
        // always applies in this branch.
        d.label = CaseLabel::n2_mu;
        d.coefficient = constants().mu / 2.0;
        d.applicable_theorem = "sigma-tilde comparison";
        return d;
    }
    if (a >= 0.765) {
        d.label = CaseLabel::II_a;
        d.coefficient = 31.0 / 100.0;
        d.applicable_theorem = "mu = (4/pi^2)(a/delta) chained with nK bound";
        return d;
    }
    if (a >= 1.53 * delta) {
        d.label = CaseLabel::II_b_1;
        d.coefficient = 4.0 / (kPi * kPi) * 1.53 / 2.0;
        d.applicable_theorem = "mu = (4/pi^2)(a/delta) comparison";
        return d;
    }
    d.label = CaseLabel::II_b_2;
    d.coefficient = 0.625 / 2.0;
    d.applicable_theorem = "sigma comparison";
    return d;
}

CheckResult integral_chain_check(const TestFunctionSpec& spec) {
    // z must be positive on the closed interval.
    double zmin = std::numeric_limits<double>::infinity();
    const int probe = 2001;
    for (int i = 0; i < probe; ++i) {
        const double t = -kHalfPi + kPi * i / (probe - 1);
        zmin = std::min(zmin, test_function_jet(spec, t).f);
    }
    if (!(zmin > 0.0))
        throw std::invalid_argument("integral chain requires z > 0");

    const auto zq = integrate(
        [&](double t) { return test_function_jet(spec, t).f; }, -kHalfPi,
        kHalfPi);
    const auto invq = integrate(
        [&](double t) { return 1.0 / std::sqrt(test_function_jet(spec, t).f); },
        -kHalfPi, kHalfPi, 1e-11);

    const double tol = 1e-10;
    double viol;
    if (!zq.converged || !invq.converged) {
        viol = std::numeric_limits<double>::infinity();
    } else {
        const double mass_viol =
            std::fabs(zq.value - (1.0 - spec.m) * kPi);
        const double chain_viol =
            std::pow(kPi, 1.5) / std::sqrt(zq.value) - invq.value;
        viol = std::max(mass_viol, chain_viol);
    }
    return make_check("integral_chain",
                      "int 1/sqrt(z) >= pi^(3/2)/sqrt(int z), int z = (1-m) pi",
                      viol, tol, 0.0);
}

}  // namespace eigengap
