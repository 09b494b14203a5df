#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigengap/barrier.hpp"
#include "eigengap/bounds.hpp"
#include "eigengap/lemmas.hpp"
#include "eigengap/model.hpp"
#include "eigengap/report.hpp"

namespace {

using namespace eigengap;

struct OutputOptions {
    bool json = false;
    bool csv = false;
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opt) {
    cmd->add_flag("--json", opt.json, "emit the report as JSON");
    cmd->add_flag("--csv", opt.csv, "emit a CSV table instead of a report");
    cmd->add_option("--out", opt.out_path, "write output to a file");
}

int emit(const std::string& text, const OutputOptions& opt) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << opt.out_path << "\n";
            return 2;
        }
        f << text;
        return 0;
    }
    std::cout << text;
    return 0;
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "suite: " << r.suite << "\n";
    for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id
           << "  max_violation=" << format_number(c.max_violation)
           << " tol=" << format_number(c.tolerance)
           << " worst_t=" << format_number(c.worst_t) << "\n";
    }
    os << "pass: " << (r.pass() ? "true" : "false") << "\n";
    return os.str();
}

int finish(const Report& r, const OutputOptions& opt) {
    const int rc = emit(opt.json ? to_json(r) : report_text(r), opt);
    if (rc != 0) return rc;
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for first-eigenvalue lower bounds "
                 "under a positive Ricci curvature hypothesis"};
    app.require_subcommand(1);

    // constants
    auto* cmd_constants = app.add_subcommand(
        "constants", "print tau, mu, the sigma ratios and endpoint values");
    OutputOptions opt_constants;
    add_output_flags(cmd_constants, opt_constants);

    // verify lemmas | verify barrier
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->require_subcommand(1);
    auto* cmd_lemmas = cmd_verify->add_subcommand("lemmas");
    auto* cmd_barrier = cmd_verify->add_subcommand("barrier");
    int grid_count = 10000;
    double tol = 1e-9;
    OutputOptions opt_lemmas, opt_barrier;
    cmd_lemmas->add_option("--grid", grid_count, "grid point count");
    cmd_lemmas->add_option("--tol", tol, "residual tolerance");
    add_output_flags(cmd_lemmas, opt_lemmas);
    double barrier_tol = 1e-10;
    int barrier_specs = 50, barrier_points = 1000;
    cmd_barrier->add_option("--tol", barrier_tol, "residual tolerance");
    cmd_barrier->add_option("--specs", barrier_specs, "random spec count");
    cmd_barrier->add_option("--grid", barrier_points, "points per spec");
    add_output_flags(cmd_barrier, opt_barrier);

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "eigenvalue lower bounds");
    BoundParams bp;
    OutputOptions opt_bound;
    cmd_bound->add_option("--n", bp.n, "dimension")->required();
    cmd_bound->add_option("--K", bp.K, "Ricci constant")->required();
    cmd_bound->add_option("--d", bp.d, "diameter")->required();
    add_output_flags(cmd_bound, opt_bound);

    // case
    auto* cmd_case = app.add_subcommand("case", "case-tree decision");
    double case_a = 0.0, case_delta = 0.1;
    int case_n = 2;
    OutputOptions opt_case;
    cmd_case->add_option("--a", case_a, "asymmetry a")->required();
    cmd_case->add_option("--delta", case_delta, "delta = alpha/lambda")
        ->required();
    cmd_case->add_option("--n", case_n, "dimension")->required();
    add_output_flags(cmd_case, opt_case);

    // model
    auto* cmd_model = app.add_subcommand(
        "model", "solve the 1D Neumann comparison model");
    ModelProblem mp;
    double b_param = 1.0 + 1e-8;
    OutputOptions opt_model;
    cmd_model->add_option("--n", mp.n, "dimension")->required();
    cmd_model->add_option("--K", mp.K, "Ricci constant")->required();
    cmd_model->add_option("--left", mp.left, "left endpoint")->required();
    cmd_model->add_option("--right", mp.right, "right endpoint")->required();
    cmd_model->add_option("--mesh", mp.mesh, "cell count")->required();
    cmd_model->add_option("--b", b_param, "level parameter b > 1");
    add_output_flags(cmd_model, opt_model);

    // compare
    auto* cmd_compare = app.add_subcommand(
        "compare", "check Z(t) <= z(t) for a chosen comparison function");
    ModelProblem cp;
    std::string construction = "auto";
    double cb_param = 1.0 + 1e-8;
    OutputOptions opt_compare;
    cmd_compare->add_option("--n", cp.n, "dimension")->required();
    cmd_compare->add_option("--K", cp.K, "Ricci constant")->required();
    cmd_compare->add_option("--left", cp.left, "left endpoint")->required();
    cmd_compare->add_option("--right", cp.right, "right endpoint")->required();
    cmd_compare->add_option("--mesh", cp.mesh, "cell count")->required();
    cmd_compare->add_option("--construction", construction,
                            "comparison function: xi, mu, sigma-tilde or auto");
    cmd_compare->add_option("--b", cb_param, "level parameter b > 1");
    add_output_flags(cmd_compare, opt_compare);

    // sweep
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "run bound checks for a JSON array of model problems");
    std::string config_path;
    OutputOptions opt_sweep;
    cmd_sweep->add_option("--config", config_path, "JSON config path")
        ->required();
    add_output_flags(cmd_sweep, opt_sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_constants->parsed()) {
            const auto k = constants();
            const auto ep = endpoint_constants();
            Report r;
            r.suite = "constants";
            r.param("tau", k.tau);
            r.param("mu", k.mu);
            r.param("z_min_coefficient", k.z_min_coefficient);
            // sigma c^2 / delta at the c = 1.53 delta corner
            r.param("sigma_ratio_at_1.53delta", 1.53 * k.tau /
                                                    k.z_min_coefficient);
            r.param("delta_minus_sigma_c2_coeff",
                    1.0 - 1.53 * k.tau / k.z_min_coefficient);
            const double pi = std::numbers::pi;
            r.param("sigma_tilde_c2_coeff",
                    pi * pi / 2.0 * std::sqrt(k.tau / (pi * pi - 4.0)));
            r.param("xi_at_zero", ep.xi_at_zero);
            r.param("xi1_at_end", ep.xi1_at_end);
            r.param("xi3_at_end", ep.xi3_at_end);
            r.param("eta1_at_zero", ep.eta1_at_zero);
            r.param("eta1_at_end", ep.eta1_at_end);
            r.param("eta3_at_end", ep.eta3_at_end);
            r.param("r_at_end", ep.r_at_end);
            r.param("r1_at_end", ep.r1_at_end);
            return finish(r, opt_constants);
        }

        if (cmd_lemmas->parsed()) {
            GridSpec grid;
            grid.count = grid_count;
            if (opt_lemmas.csv) {
                std::vector<double> ts, xs, es, rs;
                for (double t : grid.points()) {
                    ts.push_back(t);
                    xs.push_back(xi_jet(t).f);
                    es.push_back(eta_jet(t).f);
                    rs.push_back(ratio_r(t));
                }
                return emit(to_csv({{"t", ts}, {"xi", xs}, {"eta", es},
                                    {"r", rs}}),
                            opt_lemmas);
            }
            Report r;
            r.suite = "lemmas";
            r.param("grid", grid_count);
            r.param("tol", tol);
            r.checks = verify_all_lemmas(grid, tol);
            return finish(r, opt_lemmas);
        }

        if (cmd_barrier->parsed()) {
            Report r;
            r.suite = "barrier";
            r.param("specs", barrier_specs);
            r.param("grid", barrier_points);
            r.param("tol", barrier_tol);
            r.checks = verify_barrier(barrier_specs, barrier_points,
                                      barrier_tol);
            return finish(r, opt_barrier);
        }

        if (cmd_bound->parsed()) {
            Report r;
            r.suite = "bound";
            r.param("n", bp.n);
            r.param("K", bp.K);
            r.param("d", bp.d);
            const auto cb = classical_bounds(bp);
            r.param("main_bound", main_bound(bp));
            r.param("lichnerowicz", cb.lichnerowicz);
            r.param("zhong_yang", cb.zhong_yang);
            r.param("yang", cb.yang);
            // P. Li's conjectured line, reported for reference only.
            r.param("li_conjecture_reference",
                    cb.zhong_yang + (bp.n - 1) * bp.K);
            return finish(r, opt_bound);
        }

        if (cmd_case->parsed()) {
            const auto d = case_select(case_a, case_delta, case_n);
            Report r;
            r.suite = "case";
            r.param("a", case_a);
            r.param("delta", case_delta);
            r.param("n", case_n);
            r.param("label", case_label_name(d.label));
            r.param("coefficient", d.coefficient);
            r.param("applicable", d.applicable_theorem);
            return finish(r, opt_case);
        }

        if (cmd_model->parsed()) {
            const auto sol = solve_first_neumann(mp);
            if (opt_model.csv) {
                std::vector<double> ts, zs;
                for (const auto& zsamp : compute_Z(sol, b_param)) {
                    ts.push_back(zsamp.t);
                    zs.push_back(zsamp.Z);
                }
                return emit(to_csv({{"t", ts}, {"Z", zs}}), opt_model);
            }
            Report r;
            r.suite = "model";
            r.param("n", mp.n);
            r.param("K", mp.K);
            r.param("left", mp.left);
            r.param("right", mp.right);
            r.param("mesh", mp.mesh);
            r.param("lambda1", sol.lambda1);
            r.param("k", sol.k);
            r.param("a", sol.a);
            r.param("delta", 0.5 * (mp.n - 1) * mp.K / sol.lambda1);
            r.param("richardson_gap", sol.richardson_gap);
            r.checks = check_bounds_against_spectrum(mp);
            return finish(r, opt_model);
        }

        if (cmd_compare->parsed()) {
            const auto sol = solve_first_neumann(cp);
            const double delta = 0.5 * (cp.n - 1) * cp.K / sol.lambda1;
            TestFunctionSpec spec;
            if (construction == "xi") {
                spec.kind = TestFunctionKind::xi_only;
                spec.m = delta;
            } else if (construction == "mu") {
                spec.kind = TestFunctionKind::mu_combination;
                spec.c = sol.a / cb_param;
                spec.m = delta;
            } else if (construction == "sigma-tilde") {
                const double c = sol.a / cb_param;
                spec.kind = TestFunctionKind::sigma_tilde_combination;
                spec.c = c;
                spec.m = delta - constants().sigma_tilde(c, delta) * c * c;
            } else if (construction == "auto") {
                spec = theorem_test_function(sol.a, delta, cp.n, cb_param);
            } else {
                std::cerr << "error: unknown construction " << construction << "\n";
                return 2;
            }
            if (opt_compare.csv) {
                std::vector<double> ts, zv, zc;
                for (const auto& zsamp : compute_Z(sol, cb_param)) {
                    ts.push_back(zsamp.t);
                    zv.push_back(zsamp.Z);
                    zc.push_back(test_function_jet(spec, zsamp.t).f);
                }
                return emit(to_csv({{"t", ts}, {"Z", zv}, {"z", zc}}),
                            opt_compare);
            }
            Report r;
            r.suite = "compare";
            r.param("n", cp.n);
            r.param("K", cp.K);
            r.param("left", cp.left);
            r.param("right", cp.right);
            r.param("mesh", cp.mesh);
            r.param("construction", construction);
            r.param("a", sol.a);
            r.param("delta", delta);
            r.param("c", spec.c);
            r.param("m", spec.m);
            r.checks.push_back(check_comparison(sol, spec, cb_param));
            return finish(r, opt_compare);
        }

        if (cmd_sweep->parsed()) {
            std::ifstream f(config_path);
            if (!f) {
                std::cerr << "error: cannot open " << config_path << "\n";
                return 2;
            }
            nlohmann::json cfg;
            f >> cfg;
            Report r;
            r.suite = "sweep";
            r.param("config", config_path);
            int index = 0;
            for (const auto& item : cfg) {
                ModelProblem prob;
                prob.n = item.at("n").get<int>();
                prob.K = item.at("K").get<double>();
                prob.left = item.at("left").get<double>();
                prob.right = item.at("right").get<double>();
                prob.mesh = item.value("mesh", 1024);
                const std::string tag = "[" + std::to_string(index++) + "] ";
                for (auto& c : check_bounds_against_spectrum(prob)) {
                    c.id = tag + c.id;
                    r.checks.push_back(std::move(c));
                }
                const auto sol = solve_first_neumann(prob);
                const double delta = 0.5 * (prob.n - 1) * prob.K / sol.lambda1;
                const auto spec =
                    theorem_test_function(sol.a, delta, prob.n);
                auto cmp = check_comparison(sol, spec, 1.0 + 1e-8);
                cmp.id = tag + cmp.id;
                r.checks.push_back(std::move(cmp));
            }
            return finish(r, opt_sweep);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
