// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "eigengap/bounds.hpp"
#include "eigengap/lemmas.hpp"
#include "eigengap/model.hpp"

using namespace eigengap;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int number, const std::string& label, bool ok,
            const std::string& detail) {
    std::printf("[%s] %d. %s (%s)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), detail.c_str());
    if (!ok) ++failures;
}

void criterion_constants() {
    const auto k = constants();
    bool ok = true;
    std::string detail;

    ok &= (k.mu >= 0.7649 && k.mu <= 0.7650 && k.mu > 0.75);
    const double ratio = 1.53 * k.tau / k.z_min_coefficient;
    ok &= std::fabs(ratio - 0.374837516563) < 1e-9;
    ok &= std::fabs((1.0 - ratio) - 0.625162) < 1e-6;
    const double cap = kPi * kPi / 2.0 * std::sqrt(k.tau / (kPi * kPi - 4.0));
    ok &= std::fabs(cap - 0.235) < 1e-3;
    detail = "mu=" + std::to_string(k.mu) +
             " sigma_ratio=" + std::to_string(ratio) +
             " tilde_cap=" + std::to_string(cap);
    report(1, "constants reproduction", ok, detail);
}

void criterion_lemmas() {
    GridSpec g;
    g.count = 10000;
    g.spacing = GridSpec::Spacing::chebyshev;
    const auto checks = verify_all_lemmas(g, 1e-9);
    bool ok = true;
    double worst = 0.0;
    std::string worst_id = "-";
    for (const auto& c : checks) {
        ok &= c.pass;
        if (c.max_violation > worst) {
            worst = c.max_violation;
            worst_id = c.id;
        }
    }
    report(2, "lemma suite on 10^4 Chebyshev nodes", ok,
           std::to_string(checks.size()) + " checks, worst " + worst_id +
               " violation " + std::to_string(worst));
}

void criterion_barrier() {
    const auto checks = verify_barrier(50, 1000, 1e-10);
    bool ok = true;
    double worst = 0.0;
    for (const auto& c : checks) {
        ok &= c.pass;
        worst = std::max(worst, c.max_violation);
    }
    report(3, "barrier identities, 50 specs x 10^3 points", ok,
           "worst violation " + std::to_string(worst));
}

void criterion_spectrum_oracle() {
    bool ok = true;
    std::string detail;

    ModelProblem flat;
    flat.n = 2;
    flat.K = 1e-12;
    flat.left = -1.0;
    flat.right = 1.0;
    flat.mesh = 4096;
    const double flat_lambda = first_eigenvalue_raw(flat);
    const double flat_exact = kPi * kPi / 4.0;
    ok &= std::fabs(flat_lambda - flat_exact) / flat_exact < 1e-6;
    detail += "flat_rel=" +
              std::to_string(std::fabs(flat_lambda - flat_exact) / flat_exact);

    for (int n : {2, 3}) {
        ModelProblem sph;
        sph.n = n;
        sph.K = 1.0;
        sph.left = -kPi / 2.0 + 1e-3;
        sph.right = kPi / 2.0 - 1e-3;
        sph.mesh = 4096;
        const double lam = first_eigenvalue_raw(sph);
        ok &= std::fabs(lam - n) / n < 1e-4;
        detail += " sphere" + std::to_string(n) +
                  "_rel=" + std::to_string(std::fabs(lam - n) / n);
    }

    ModelProblem conv;
    conv.n = 3;
    conv.K = 1.0;
    conv.left = -1.1;
    conv.right = 0.9;
    conv.mesh = 1024;
    const double c1 = first_eigenvalue_raw(conv);
    conv.mesh = 2048;
    const double c2 = first_eigenvalue_raw(conv);
    conv.mesh = 4096;
    const double c3 = first_eigenvalue_raw(conv);
    const double ratio = (c1 - c2) / (c2 - c3);
    ok &= (ratio > 3.0 && ratio < 5.0);
    detail += " richardson=" + std::to_string(ratio);
    report(4, "spectrum oracle at mesh 4096", ok, detail);
}

void criterion_sweep() {
    struct Sweep {
        int n;
        double K, left, right;
    };
    std::vector<Sweep> problems;
    for (int n : {2, 3, 5}) {
        for (double K : {0.25, 1.0, 4.0}) {
            const double s = 1.0 / std::sqrt(K);
            problems.push_back({n, K, -0.8 * s, 0.8 * s});
            problems.push_back({n, K, -1.2 * s, 0.7 * s});
        }
    }
    problems.push_back({2, 1.0, -1.5, 1.5});
    problems.push_back({5, 1.0, -0.5, 0.45});

    bool ok = true;
    double worst_gap = -1e300;
    int idx_worst = -1;
    for (std::size_t i = 0; i < problems.size(); ++i) {
        const auto& q = problems[i];
        ModelProblem p;
        p.n = q.n;
        p.K = q.K;
        p.left = q.left;
        p.right = q.right;
        p.mesh = 2048;
        const auto sol = solve_first_neumann(p);
        const BoundParams bp{p.n, p.K, p.diameter()};
        const auto cls = classical_bounds(bp);
        ok &= sol.lambda1 >= main_bound(bp) - 1e-9;
        ok &= sol.lambda1 >= cls.lichnerowicz - 1e-9;
        ok &= sol.lambda1 >= cls.zhong_yang - 1e-9;

        const double delta = 0.5 * (p.n - 1) * p.K / sol.lambda1;
        const double b = 1.0 + 1e-8;
        const auto spec = theorem_test_function(sol.a, delta, p.n, b);
        const auto cmp = check_comparison(sol, spec, b, 1e-6);
        ok &= cmp.pass;
        if (cmp.max_violation > worst_gap) {
            worst_gap = cmp.max_violation;
            idx_worst = static_cast<int>(i);
        }
    }
    report(5, "end-to-end sweep over " + std::to_string(problems.size()) +
                  " model problems",
           ok,
           "worst Z-z gap " + std::to_string(worst_gap) + " at problem " +
               std::to_string(idx_worst));
}

void criterion_case_tree() {
    bool ok = ((20.0 - kPi * kPi) / 16.0 > kPi * kPi / 16.0);
    double min_coeff = 1e300;
    for (int n : {2, 3, 5}) {
        const double floor_coeff = (n == 2) ? 3.0 / 8.0 : 31.0 / 100.0;
        const double dmax = (n - 1) / (2.0 * n);
        for (int i = 0; i < 200; ++i) {
            for (int j = 0; j < 200; ++j) {
                const double a = 0.999 * i / 199.0;
                const double delta = dmax * (j + 1) / 200.0;
                const auto d = case_select(a, delta, n);
                ok &= (d.coefficient >= floor_coeff - 1e-15);
                min_coeff = std::min(min_coeff, d.coefficient);
            }
        }
    }
    report(6, "case tree total with guaranteed coefficient", ok,
           "min coefficient " + std::to_string(min_coeff));
}

}  // namespace

int main() {
    criterion_constants();
    criterion_lemmas();
    criterion_barrier();
    criterion_spectrum_oracle();
    criterion_sweep();
    criterion_case_tree();
    return failures == 0 ? 0 : 1;
}
