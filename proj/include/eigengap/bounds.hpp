#pragma once

#include <string>

#include "eigengap/barrier.hpp"
#include "eigengap/checks.hpp"

// Eigenvalue lower bounds: the curvature constants tau, sigma, sigma-tilde
// and mu, the case analysis that selects the guaranteed coefficient, and
// the classical bounds for comparison.

namespace eigengap {

// (dimension, Ricci constant, diameter); n >= 2, K > 0, d > 0.
struct BoundParams {
    int n = 2;
    double K = 1.0;
    double d = 1.0;
};

struct Constants {
    double tau = 0.0;
    double mu = 0.0;
    double z_min_coefficient = 0.0;  // c-coefficient of the min-z bound

    // sigma of the fixed-coefficient construction; sigma * c is constant.
    double sigma(double c) const;
    // Positive root of
    // -tau + (1-c) s - (pi^2/4 - 1) delta s + (pi^2/4 - 1) s^2 c^2 = 0.
    double sigma_tilde(double c, double delta) const;
    // Residual of sigma_tilde in its defining quadratic.
    double sigma_tilde_residual(double c, double delta) const;
};

Constants constants();

// pi^2/d^2 + coeff (n-1) K with coeff = 3/8 for n = 2, 31/100 for n >= 3.
double main_bound(const BoundParams& p);

struct ClassicalBounds {
    double lichnerowicz = 0.0;  // nK
    double zhong_yang = 0.0;    // pi^2/d^2
    double yang = 0.0;          // pi^2/d^2 + (1/4)(n-1)K
};

ClassicalBounds classical_bounds(const BoundParams& p);

enum class CaseLabel { A_zero, I, II_a, II_b_1, II_b_2, n2_mu };

const char* case_label_name(CaseLabel label);

// Which branch of the case tree applies and the guaranteed multiple of
// (n-1)K added to pi^2/d^2.
struct CaseDecision {
    CaseLabel label = CaseLabel::A_zero;
    double coefficient = 0.0;
    std::string applicable_theorem;
};

// Walks the case tree for observed (a, delta).  Requires a in [0,1) and
// 0 < delta <= (n-1)/(2n).
CaseDecision case_select(double a, double delta, int n);

// Verifies int z = (1-m) pi and the Cauchy-Schwarz chain
// int 1/sqrt(z) >= pi^(3/2) / sqrt(int z) for a positive test function.
CheckResult integral_chain_check(const TestFunctionSpec& spec);

}  // namespace eigengap
