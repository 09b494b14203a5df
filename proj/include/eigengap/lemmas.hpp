#pragma once

#include <vector>

#include "eigengap/checks.hpp"

// Executable checks for every identity and inequality claimed about
// xi, eta and r = xi'/eta'.  Each claim maps to exactly one CheckResult
// id; the suite sizes are fixed (11 + 8 + 4 + 3 checks).

namespace eigengap {

std::vector<CheckResult> verify_xi_lemma(const GridSpec& grid, double tol);
std::vector<CheckResult> verify_eta_lemma(const GridSpec& grid, double tol);
std::vector<CheckResult> verify_r_lemma(const GridSpec& grid, double tol);

// Integral identities: int xi = -pi, int eta = 0, and
// int (1 + c eta + m xi) = (1 - m) pi for a sample (c, m).
std::vector<CheckResult> verify_integrals(double tol);

// Full suite in fixed order.
std::vector<CheckResult> verify_all_lemmas(const GridSpec& grid, double tol);

}  // namespace eigengap
