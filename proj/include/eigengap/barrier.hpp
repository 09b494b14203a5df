#pragma once

#include <vector>

#include "eigengap/checks.hpp"
#include "eigengap/special_functions.hpp"

// Barrier inequality machinery: the full right-hand side evaluated at a
// touching maximum, the simplified corollary forms, the z = 1 + c eta + m xi
// test-function family, and the Taylor lower bound for min z.

namespace eigengap {

// Candidate value and first two derivatives at a touching point t0,
// together with the normalized parameters c = a/b and delta = alpha/lambda.
struct BarrierPoint {
    double t0 = 0.0;
    double z = 1.0;
    double z1 = 0.0;
    double z2 = 0.0;
    double c = 0.0;
    double delta = 0.0;
};

// Full right-hand side of the barrier inequality; at a touching maximum
// of Z - z it is >= 0.  The caller asserts, this only evaluates.
// Throws std::invalid_argument if z <= 0.
double barrier_rhs(const BarrierPoint& p);

enum class Corollary { cor1, cor2 };

struct CorollaryRhs {
    double rhs = 0.0;           // simplified right-hand side
    double dropped_term = 0.0;  // the correction term the corollary drops
};

// Simplified right-hand side under the corollary hypotheses, plus the
// dropped correction term (which the corollaries assert is >= 0).
// Hypothesis violations throw std::invalid_argument.
CorollaryRhs corollary_rhs(const BarrierPoint& p, Corollary which);

enum class TestFunctionKind {
    eta_only,
    mu_combination,
    sigma_combination,
    sigma_tilde_combination,
    xi_only,
};

// Realizes z(t) = 1 + c eta(t) + m xi(t).
struct TestFunctionSpec {
    TestFunctionKind kind = TestFunctionKind::mu_combination;
    double c = 0.0;
    double m = 0.0;
};

// z and its first three derivatives by linear combination of the xi and
// eta jets.
Jet3 test_function_jet(const TestFunctionSpec& spec, double t);

// Residual of (1/2) z'' cos^2 - z' cos sin - z = -1 - c sin + 2 m cos^2,
// which every combination satisfies exactly up to rounding.
double z_equation_residual(const TestFunctionSpec& spec, double t);

// The c-coefficient of the Taylor lower bound for min (1 + c eta + d xi):
// [3/2 - pi^2/8 - (pi^2/32 - 1/6) 1.53] (200/153)
//   - (8/(3 pi) - pi/4)^2 / [-1 + (12 - pi^2) (100/153)].
double z_min_coefficient();

// Lower bound coefficient * c for min of 1 + c eta + delta xi under
// 0 < c < 1.53 delta, c < 0.765, delta <= 1/2.  Violations throw.
double z_min_bound(double c, double delta);

// Barrier identity suite: z-equation residuals over deterministic random
// coefficient draws, corollary dropped-term nonnegativity, the min-z
// Taylor bound against grid minimization, and the slope/endpoint
// invariants of the combination family.
std::vector<CheckResult> verify_barrier(int num_specs, int points_per_spec,
                                        double tol);

}  // namespace eigengap
