#include "eigengap/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "eigengap/bounds.hpp"

namespace eigengap {
namespace {

constexpr double kPi = std::numbers::pi;

void require_problem(const ModelProblem& p) {
    if (p.n < 2) throw std::invalid_argument("dimension n must be >= 2");
    if (!(p.K > 0.0)) throw std::invalid_argument("K must be positive");
    if (p.mesh < 16) throw std::invalid_argument("mesh must be >= 16");
    const double cap = kPi / (2.0 * std::sqrt(p.K));
    if (!(-cap < p.left && p.left < p.right && p.right < cap))
        throw std::invalid_argument(
            "interval must satisfy -pi/(2 sqrt K) < left < right < pi/(2 sqrt K)");
}

struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;  // off[i] couples i and i+1
};

// Finite-volume Neumann discretization of -(w v')' = lambda w v.
// Row sums of the stiffness matrix vanish, so constants are the exact
// discrete null mode.
void assemble(const ModelProblem& p, Tridiag& A, std::vector<double>& mass) {
    const int m = p.mesh;
    const double h = p.diameter() / m;
    const double rootK = std::sqrt(p.K);
    auto weight = [&](double s) {
        return std::pow(std::cos(rootK * s), p.n - 1);
    };
    A.diag.assign(m + 1, 0.0);
    A.off.assign(m, 0.0);
    mass.assign(m + 1, 0.0);
    for (int i = 0; i < m; ++i) {
        const double w_half = weight(p.left + (i + 0.5) * h);
        A.off[i] = -w_half / h;
        A.diag[i] += w_half / h;
        A.diag[i + 1] += w_half / h;
    }
    for (int i = 0; i <= m; ++i) {
        const double cell = (i == 0 || i == m) ? 0.5 * h : h;
        mass[i] = cell * weight(p.left + i * h);
    }
}

// Thomas solve of (A - shift M) x = rhs.
void shifted_solve(const Tridiag& A, const std::vector<double>& mass,
                   double shift, const std::vector<double>& rhs,
                   std::vector<double>& x) {
    const int n = static_cast<int>(A.diag.size());
    std::vector<double> c(n), d(n);
    double piv = A.diag[0] - shift * mass[0];
    c[0] = A.off[0] / piv;
    d[0] = rhs[0] / piv;
    for (int i = 1; i < n; ++i) {
        piv = A.diag[i] - shift * mass[i] - A.off[i - 1] * c[i - 1];
        if (i < n - 1) c[i] = A.off[i] / piv;
        d[i] = (rhs[i] - A.off[i - 1] * d[i - 1]) / piv;
    }
    x.assign(n, 0.0);
    x[n - 1] = d[n - 1];
    for (int i = n - 2; i >= 0; --i) x[i] = d[i] - c[i] * x[i + 1];
}

double dot_mass(const std::vector<double>& mass, const std::vector<double>& x,
                const std::vector<double>& y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += mass[i] * x[i] * y[i];
    return acc;
}

// Remove the constant mode in the weighted inner product.
void deflate(const std::vector<double>& mass, std::vector<double>& x) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += mass[i] * x[i];
        den += mass[i];
    }
    const double mean = num / den;
    for (double& xi : x) xi -= mean;
}

double rayleigh(const Tridiag& A, const std::vector<double>& mass,
                const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    double num = 0.0;
    for (int i = 0; i < n; ++i) num += A.diag[i] * x[i] * x[i];
    for (int i = 0; i < n - 1; ++i) num += 2.0 * A.off[i] * x[i] * x[i + 1];
    return num / dot_mass(mass, x, x);
}

// Deflated inverse iteration with a shift strictly below lambda1
// (pi^2/d^2 is a lower bound for every admissible model).
double eigenpair(const ModelProblem& p, std::vector<double>& vec) {
    Tridiag A;
    std::vector<double> mass;
    assemble(p, A, mass);
    const int n = p.mesh + 1;
    const double shift = 0.5 * kPi * kPi / (p.diameter() * p.diameter());

    vec.assign(n, 0.0);
    for (int i = 0; i < n; ++i)
        vec[i] = -std::cos(kPi * i / (n - 1.0));
    deflate(mass, vec);

    std::vector<double> rhs(n), next;
    double lambda = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        for (int i = 0; i < n; ++i) rhs[i] = mass[i] * vec[i];
        shifted_solve(A, mass, shift, rhs, next);
        deflate(mass, next);
        const double norm = std::sqrt(dot_mass(mass, next, next));
        for (double& x : next) x /= norm;
        double delta = 0.0;
        for (int i = 0; i < n; ++i)
            delta = std::max(delta, std::fabs(std::fabs(next[i]) -
                                              std::fabs(vec[i])));
        vec.swap(next);
        const double estimate = rayleigh(A, mass, vec);
        if (delta < 1e-13 && iter > 3) {
            lambda = estimate;
            break;
        }
        lambda = estimate;
    }
    return lambda;
}

}  // namespace

double first_eigenvalue_raw(const ModelProblem& p) {
    require_problem(p);
    std::vector<double> vec;
    return eigenpair(p, vec);
}

EigenSolution solve_first_neumann(const ModelProblem& p) {
    require_problem(p);
    std::vector<double> vec;
    const double lambda = eigenpair(p, vec);

    ModelProblem fine = p;
    fine.mesh = 2 * p.mesh;
    std::vector<double> fine_vec;
    const double lambda_fine = eigenpair(fine, fine_vec);
    const double gap = std::fabs(lambda - lambda_fine) / lambda_fine;
    // A second-order scheme leaves a relative gap ~ C / mesh^2; flag the
    // mesh as too coarse when the gap is far beyond that scale.
    const double allowed = 200.0 / (static_cast<double>(p.mesh) * p.mesh);
    if (gap > allowed)
        throw std::runtime_error("mesh too coarse: Richardson gap " +
                                 std::to_string(gap));

    EigenSolution sol;
    sol.lambda1 = lambda;
    sol.richardson_gap = gap;
    sol.n = p.n;
    sol.K = p.K;
    sol.diameter = p.diameter();

    const int m = p.mesh;
    const double h = sol.diameter / m;
    sol.s.resize(m + 1);
    for (int i = 0; i <= m; ++i) sol.s[i] = p.left + i * h;

    double vmax = *std::max_element(vec.begin(), vec.end());
    double vmin = *std::min_element(vec.begin(), vec.end());
    if (std::fabs(vmin) > vmax) {
        for (double& x : vec) x = -x;
        std::swap(vmax, vmin);
        vmax = -vmax;
        vmin = -vmin;
    }
    for (double& x : vec) x /= vmax;
    sol.v = std::move(vec);
    sol.k = -*std::min_element(sol.v.begin(), sol.v.end());
    sol.a = (1.0 - sol.k) / (1.0 + sol.k);

    sol.dv.resize(m + 1);
    for (int i = 1; i < m; ++i)
        sol.dv[i] = (sol.v[i + 1] - sol.v[i - 1]) / (2.0 * h);
    sol.dv[0] = (-3.0 * sol.v[0] + 4.0 * sol.v[1] - sol.v[2]) / (2.0 * h);
    sol.dv[m] = (3.0 * sol.v[m] - 4.0 * sol.v[m - 1] + sol.v[m - 2]) / (2.0 * h);
    return sol;
}

std::vector<ZSample> compute_Z(const EigenSolution& sol, double b) {
    if (!(b > 1.0)) throw std::invalid_argument("compute_Z requires b > 1");
    const int m = static_cast<int>(sol.v.size()) - 1;
    // Extrema of the monotone first eigenfunction sit at the interval
    // ends; the two cells next to each are excluded (0/0 noise).
    const int skip = 3;
    const double scale = 2.0 / (1.0 + sol.k);
    std::vector<ZSample> out;
    out.reserve(std::max(0, m + 1 - 2 * skip));
    for (int i = skip; i <= m - skip; ++i) {
        const double vbar = (sol.v[i] - (1.0 - sol.k) / 2.0) * scale;
        const double dvbar = sol.dv[i] * scale;
        const double denom = b * b - vbar * vbar;
        if (!(denom > 0.0)) continue;
        ZSample zs;
        zs.t = std::asin(vbar / b);
        zs.Z = dvbar * dvbar / (denom * sol.lambda1);
        out.push_back(zs);
    }
    return out;
}

CheckResult check_comparison(const EigenSolution& sol,
                             const TestFunctionSpec& spec, double b,
                             double tol) {
    const auto samples = compute_Z(sol, b);
    double worst = -std::numeric_limits<double>::infinity();
    double worst_t = 0.0;
    for (const auto& zs : samples) {
        const double z = test_function_jet(spec, zs.t).f;
        const double gap = zs.Z - z;
        if (gap > worst) {
            worst = gap;
            worst_t = zs.t;
        }
    }
    return make_check("model.Z_below_z", "Z(t) <= z(t)", worst, tol, worst_t);
}

TestFunctionSpec theorem_test_function(double a, double delta, int n,
                                       double b) {
    TestFunctionSpec spec;
    const double c = a / b;
    if (a < 1e-9) {
        spec.kind = TestFunctionKind::xi_only;
        spec.c = 0.0;
        spec.m = delta;
        return spec;
    }
    if (a >= kPi * kPi / 4.0 * delta) {
        spec.kind = TestFunctionKind::mu_combination;
        spec.c = c;
        spec.m = delta;  // mu = 1
        return spec;
    }
    const double a_cap = ((12.0 - kPi * kPi) * n + kPi * kPi - 4.0) / (8.0 * n);
    if (a <= a_cap) {
        spec.kind = TestFunctionKind::sigma_tilde_combination;
        spec.c = c;
        spec.m = delta - constants().sigma_tilde(c, delta) * c * c;
        return spec;
    }
    // Large asymmetry below the case-I threshold: fall back to the
    // mu = (4/pi^2)(a/delta) comparison function.
    spec.kind = TestFunctionKind::mu_combination;
    spec.c = c;
    spec.m = 4.0 / (kPi * kPi) * a * (1.0 - 1e-9);
    return spec;
}

std::vector<CheckResult> check_bounds_against_spectrum(const ModelProblem& p) {
    const EigenSolution sol = solve_first_neumann(p);
    BoundParams bp{p.n, p.K, p.diameter()};
    const auto classical = classical_bounds(bp);
    const double lam = sol.lambda1;
    const double tol = 1e-9;

    std::vector<CheckResult> out;
    out.push_back(make_check("spectrum.main_bound", "main lower bound",
                             main_bound(bp) - lam, tol, 0.0));
    out.push_back(make_check("spectrum.lichnerowicz", "nK-bound",
                             classical.lichnerowicz - lam, tol, 0.0));
    out.push_back(make_check("spectrum.zhong_yang", "diameter bound",
                             classical.zhong_yang - lam, tol, 0.0));
    out.push_back(make_check("spectrum.yang", "yang-bound",
                             classical.yang - lam, tol, 0.0));

    const double delta = 0.5 * (p.n - 1) * p.K / lam;
    const double a_eff = (sol.a < 1e-9) ? 0.0 : sol.a;
    const auto decision = case_select(a_eff, delta, p.n);
    const double conditional = classical.zhong_yang +
                               decision.coefficient * (p.n - 1) * p.K;
    out.push_back(make_check("spectrum.case_bound",
                             std::string("per-case bound, case ") +
                                 case_label_name(decision.label),
                             conditional - lam, tol, 0.0));
    return out;
}

}  // namespace eigengap
