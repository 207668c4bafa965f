// fbdf: command-line front end for the fractional BDF library.

#include "fracbdf/coefficients.hpp"
#include "fracbdf/config.hpp"
#include "fracbdf/errors.hpp"
#include "fracbdf/experiments.hpp"
#include "fracbdf/multipliers.hpp"
#include "fracbdf/solver.hpp"
#include "fracbdf/stability.hpp"
#include "fracbdf/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

using namespace fracbdf;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "fbdf/1";

// Thrown when a computed verdict fails; carries the failure record.
struct VerdictFailure {
    json record;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void header(const std::string& command, const std::vector<std::pair<std::string, std::string>>& params) {
    std::cout << "# " << kSchema << ' ' << command;
    for (const auto& [k, v] : params) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json with_schema(const std::string& command, json body) {
    body["schema"] = kSchema;
    body["command"] = command;
    return body;
}

void check_format(const std::string& format) {
    if (format != "csv" && format != "json") throw ParameterError("--format must be csv or json, got '" + format + "'");
}

json rational_json(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}, {"value", r.value()}}; }

// --- coeffs -------------------------------------------------------------------------------------

struct CoeffsArgs {
    int k = 1;
    double alpha = 0.5;
    double sigma = 0.0;
    double tau = 1.0;
    std::size_t n = 16;
    std::string format = "csv";
};

void run_coeffs(const CoeffsArgs& a) {
    check_format(a.format);
    const FracParams p{a.alpha, a.sigma, a.tau};
    p.validate();
    const CoefficientTable t = bdf_g_coefficients(BdfOrder(a.k), p, a.n);
    if (a.format == "json") {
        emit(with_schema("coeffs", {{"k", a.k}, {"alpha", a.alpha}, {"sigma", a.sigma}, {"tau", a.tau}, {"J", a.n},
                                    {"l", t.l}, {"g", t.g}}));
        return;
    }
    header("coeffs", {{"k", std::to_string(a.k)}, {"alpha", num(a.alpha)}, {"sigma", num(a.sigma)},
                      {"tau", num(a.tau)}, {"J", std::to_string(a.n)}});
    std::cout << "j,l_j,g_j\n";
    for (std::size_t j = 0; j < t.l.size(); ++j) std::cout << j << ',' << num(t.l[j]) << ',' << num(t.g[j]) << '\n';
}

// --- multipliers --------------------------------------------------------------------------------

void run_multipliers(const CoeffsArgs& a) {
    check_format(a.format);
    const FracParams p{a.alpha, a.sigma, a.tau};
    p.validate();
    const BdfOrder k(a.k);
    const MultiplierSet set = multiplier_set(k);
    const ReciprocalSeries c = reciprocal_series(k, a.sigma, a.tau, a.n);
    const QTable q = q_coefficients(bdf_g_coefficients(k, p, a.n), set, a.n);
    if (a.format == "json") {
        json mu = json::array();
        for (const Rational& r : set.mu) mu.push_back(rational_json(r));
        json roots = json::array();
        for (const auto& z : set.roots(a.sigma, a.tau))
            roots.push_back({{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}});
        emit(with_schema("multipliers", {{"k", a.k}, {"alpha", a.alpha}, {"sigma", a.sigma}, {"tau", a.tau},
                                         {"J", a.n}, {"mu", mu}, {"mu_roots", roots}, {"c", c.c}, {"q", q.q}}));
        return;
    }
    header("multipliers", {{"k", std::to_string(a.k)}, {"alpha", num(a.alpha)}, {"sigma", num(a.sigma)},
                           {"tau", num(a.tau)}, {"J", std::to_string(a.n)}});
    std::cout << "j,mu_j,c_j,q_j\n";
    for (std::size_t j = 0; j <= a.n; ++j) {
        std::cout << j << ',';
        if (j >= 1 && j <= set.mu.size()) std::cout << num(set.mu[j - 1].value());
        std::cout << ',' << num(c.c[j]) << ',' << num(q.q[j]) << '\n';
    }
}

// --- check-positivity ---------------------------------------------------------------------------

struct PositivityArgs {
    int k = 6;
    double sigma = 0.0;
    double tau = 1.0;
    std::vector<std::size_t> N = {10, 50, 200, 400};
    std::size_t trials = 1000;
    std::size_t length = 100;
    std::uint64_t seed = 20240611;
    std::size_t grid = 1024;
    std::string format = "json";
};

void run_check_positivity(const PositivityArgs& a) {
    check_format(a.format);
    const BdfOrder k(a.k);
    const TrigPolynomial f = positivity_generating_function(k, a.sigma, a.tau);
    if (a.format == "csv") {
        if (a.grid < 2) throw ParameterError("--grid must be at least 2");
        header("check-positivity", {{"k", std::to_string(a.k)}, {"sigma", num(a.sigma)}, {"tau", num(a.tau)},
                                    {"grid", std::to_string(a.grid)}});
        std::cout << "x,f\n";
        for (std::size_t i = 0; i < a.grid; ++i) {
            const double x = std::numbers::pi * static_cast<double>(i) / static_cast<double>(a.grid - 1);
            std::cout << num(x) << ',' << num(f(x)) << '\n';
        }
        return;
    }
    const Extremum lo = trig_min(f);
    const Extremum hi = trig_max(f);
    bool ok = true;
    json toeplitz = json::array();
    for (std::size_t N : a.N) {
        const ToeplitzCheck t = toeplitz_eigencheck(k, a.sigma, a.tau, N);
        toeplitz.push_back({{"N", N}, {"lambda_min", t.lambda_min}, {"lambda_max", t.lambda_max},
                            {"positive_definite", t.positive_definite}, {"passed", t.passed}});
        ok = ok && t.passed;
    }
    const QuadraticFormCheck e = multiplier_energy_check(k, a.sigma, a.tau, a.length, a.trials, a.seed);
    ok = ok && e.passed;
    json energy = {{"c_k", rational_json(energy_constant(k))}, {"N", a.length}, {"trials", e.trials},
                   {"worst_slack", e.worst_slack}, {"worst_trial", e.worst_trial}, {"passed", e.passed}};
    if (!e.passed) energy["witness"] = e.witness;
    const json report = with_schema(
        "check-positivity",
        {{"k", a.k}, {"sigma", a.sigma}, {"tau", a.tau}, {"seed", a.seed},
         {"mu_0", rational_json(positivity_shift(k))}, {"cosine_coefficients", f.t},
         {"f_min", {{"x", lo.x}, {"value", lo.value}}}, {"f_max", {{"x", hi.x}, {"value", hi.value}}},
         {"toeplitz", toeplitz}, {"energy", energy}, {"verdict", ok ? "PASS" : "FAIL"}});
    emit(report);
    if (!ok) throw VerdictFailure{{{"check", "property_p"}, {"k", a.k}, {"worst_slack", e.worst_slack}}};
}

// --- check-astability ---------------------------------------------------------------------------

struct AStabilityArgs {
    int k = 6;
    double alpha = 0.5;
    double sigma = 0.0;
    double tau = 1.0;
    std::size_t grid = 8192;
    std::string format = "json";
};

void run_check_astability(const AStabilityArgs& a) {
    check_format(a.format);
    const ArgumentSweep s = argument_sweep(BdfOrder(a.k), a.alpha, a.sigma, a.tau, a.grid);
    const double bound = std::numbers::pi / 2.0;
    constexpr double tol = 1e-9;
    const bool ok = s.max_abs_arg <= bound + tol;
    if (a.format == "csv") {
        header("check-astability", {{"k", std::to_string(a.k)}, {"alpha", num(a.alpha)}, {"sigma", num(a.sigma)},
                                    {"tau", num(a.tau)}, {"grid", std::to_string(a.grid)}});
        std::cout << "x,arg,theta1,theta2,theta3,theta4,theta5\n";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            std::cout << num(s.x[i]) << ',' << num(s.arg[i]);
            const ThetaPoint& p = s.theta[i];
            for (int j = 0; j < 5; ++j) {
                std::cout << ',';
                if (j < p.count) std::cout << num(p.theta[static_cast<std::size_t>(j)]);
            }
            std::cout << '\n';
        }
    } else {
        emit(with_schema("check-astability",
                         {{"k", a.k}, {"alpha", a.alpha}, {"sigma", a.sigma}, {"tau", a.tau}, {"grid", a.grid},
                          {"max_arg", s.max_arg}, {"min_arg", s.min_arg}, {"max_abs_arg", s.max_abs_arg},
                          {"x_at_max_abs", s.x_at_max_abs}, {"limit_at_zero", s.limit_at_zero},
                          {"unwrap_corrections", s.unwrap_corrections}, {"bound", bound}, {"tolerance", tol},
                          {"verdict", ok ? "PASS" : "FAIL"}}));
    }
    if (!ok)
        throw VerdictFailure{{{"check", "property_a"}, {"computed", s.max_abs_arg}, {"expected", bound},
                              {"tolerance", tol}, {"x", s.x_at_max_abs}}};
}

// --- toeplitz -----------------------------------------------------------------------------------

void run_toeplitz(const PositivityArgs& a) {
    check_format(a.format);
    const BdfOrder k(a.k);
    std::vector<ToeplitzCheck> checks;
    for (std::size_t N : a.N) checks.push_back(toeplitz_eigencheck(k, a.sigma, a.tau, N));
    // Diagonal values l_{i,i-j} of L, j = 0..m.
    const std::vector<double> band = positivity_generating_function(k, a.sigma, a.tau).t;
    if (a.format == "csv") {
        header("toeplitz", {{"k", std::to_string(a.k)}, {"sigma", num(a.sigma)}, {"tau", num(a.tau)}});
        std::cout << "N,lambda_min,lambda_max,f_min,f_max,positive_definite\n";
        for (const ToeplitzCheck& t : checks)
            std::cout << t.N << ',' << num(t.lambda_min) << ',' << num(t.lambda_max) << ',' << num(t.f_min) << ','
                      << num(t.f_max) << ',' << (t.positive_definite ? 1 : 0) << '\n';
        return;
    }
    json rows = json::array();
    for (const ToeplitzCheck& t : checks)
        rows.push_back({{"N", t.N}, {"lambda_min", t.lambda_min}, {"lambda_max", t.lambda_max}, {"f_min", t.f_min},
                        {"f_max", t.f_max}, {"positive_definite", t.positive_definite}, {"passed", t.passed}});
    emit(with_schema("toeplitz", {{"k", a.k}, {"sigma", a.sigma}, {"tau", a.tau}, {"band", band},
                                  {"checks", rows}}));
}

// --- solve --------------------------------------------------------------------------------------

struct SolveArgs {
    std::string config;
    int k = 0;
    std::size_t n = 0;
    bool no_correction = false;
    std::string columns = "states";
    std::string format = "csv";
};

int resolve_k(int flag, const ExperimentConfig& cfg) {
    if (flag > 0) return BdfOrder(flag).value();
    if (cfg.k) return *cfg.k;
    throw ParameterError("BDF order missing: pass --k or set \"k\" in the config");
}

void run_solve(const SolveArgs& a) {
    check_format(a.format);
    if (a.columns != "states" && a.columns != "norms")
        throw ParameterError("--columns must be states or norms, got '" + a.columns + "'");
    const ExperimentConfig cfg = load_config(a.config);
    const int k = resolve_k(a.k, cfg);
    const std::size_t N = a.n > 0 ? a.n : cfg.N.value_or(0);
    if (N == 0) throw ParameterError("step count missing: pass --n or set \"N\" in the config");
    const bool corrected = a.no_correction ? false : cfg.corrected.value_or(true);
    const SolveResult<double> r = step_solve(cfg.problem, BdfOrder(k), N, corrected);
    const double max_residual = r.residuals.empty() ? 0.0 : *std::max_element(r.residuals.begin(), r.residuals.end());
    if (max_residual > 1e-12)
        throw ConsistencyError("linear_solve_residual", max_residual, 0.0, 1e-12, "implicit solve residual too large");

    const auto& A = cfg.problem.A;
    if (a.format == "json") {
        json states = json::array();
        for (std::size_t n = 0; n <= N; ++n) {
            const auto s = r.state(n);
            states.push_back(std::vector<double>(s.begin(), s.end()));
        }
        emit(with_schema("solve", {{"k", k}, {"N", N}, {"tau", r.tau}, {"corrected", corrected},
                                   {"operator", cfg.problem.time_op.kind()}, {"sigma", cfg.problem.time_op.sigma},
                                   {"dim", r.dim}, {"max_residual", max_residual}, {"t", r.times}, {"u", states}}));
        return;
    }
    header("solve", {{"k", std::to_string(k)}, {"N", std::to_string(N)}, {"tau", num(r.tau)},
                     {"corrected", corrected ? "1" : "0"}, {"operator", cfg.problem.time_op.kind()},
                     {"sigma", num(cfg.problem.time_op.sigma)}, {"dim", std::to_string(r.dim)},
                     {"columns", a.columns}});
    if (a.columns == "norms") {
        std::cout << "n,t_n,l2_norm,energy_norm,dual_norm\n";
        for (std::size_t n = 0; n <= N; ++n) {
            const auto s = r.state(n);
            std::cout << n << ',' << num(r.times[n]) << ',' << num(A.euclidean_norm(s)) << ','
                      << num(A.energy_norm(s)) << ',' << num(A.dual_norm(s)) << '\n';
        }
        return;
    }
    std::cout << "n,t_n";
    for (std::size_t d = 0; d < r.dim; ++d) std::cout << ",u_" << d;
    std::cout << '\n';
    for (std::size_t n = 0; n <= N; ++n) {
        std::cout << n << ',' << num(r.times[n]);
        for (double x : r.state(n)) std::cout << ',' << num(x);
        std::cout << '\n';
    }
}

// --- converge -----------------------------------------------------------------------------------

struct ConvergeArgs {
    int k = 3;
    double alpha = 0.5;
    double sigma = 0.0;
    double lambda = 1.0;
    double T = 1.0;
    std::vector<std::size_t> n_list = {32, 64, 128, 256, 512};
    std::string precision = "quad";
    std::string format = "csv";
};

void run_converge(const ConvergeArgs& a) {
    check_format(a.format);
    Precision prec;
    if (a.precision == "quad")
        prec = Precision::Quad;
    else if (a.precision == "double")
        prec = Precision::Double;
    else
        throw ParameterError("--precision must be quad or double, got '" + a.precision + "'");
    const ConvergenceStudy s = convergence_harness(BdfOrder(a.k), a.alpha, a.sigma, a.lambda, a.n_list, prec, a.T);
    if (a.format == "json") {
        emit(with_schema("converge", {{"k", a.k}, {"alpha", a.alpha}, {"sigma", a.sigma}, {"lambda", a.lambda},
                                      {"T", a.T}, {"precision", to_string(prec)}, {"N", s.N},
                                      {"error_corrected", s.error_corrected}, {"order_corrected", s.order_corrected},
                                      {"error_uncorrected", s.error_uncorrected},
                                      {"order_uncorrected", s.order_uncorrected}}));
        return;
    }
    header("converge", {{"k", std::to_string(a.k)}, {"alpha", num(a.alpha)}, {"sigma", num(a.sigma)},
                        {"lambda", num(a.lambda)}, {"T", num(a.T)}, {"precision", to_string(prec)}});
    std::cout << "N,error_corrected,order_corrected,error_uncorrected,order_uncorrected\n";
    for (std::size_t i = 0; i < s.N.size(); ++i) {
        std::cout << s.N[i] << ',' << num(s.error_corrected[i]) << ',';
        if (i > 0) std::cout << num(s.order_corrected[i - 1]);
        std::cout << ',' << num(s.error_uncorrected[i]) << ',';
        if (i > 0) std::cout << num(s.order_uncorrected[i - 1]);
        std::cout << '\n';
    }
}

// --- stability ----------------------------------------------------------------------------------

struct StabilityArgs {
    std::string config;
    int k = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::vector<std::size_t> n_list;
    std::string format = "json";
};

void run_stability(const StabilityArgs& a) {
    check_format(a.format);
    const ExperimentConfig cfg = load_config(a.config);
    const int k = resolve_k(a.k, cfg);
    const std::size_t trials = a.trials > 0 ? a.trials : cfg.trials.value_or(10);
    const std::uint64_t seed = a.seed_given ? a.seed : cfg.seed.value_or(20240611);
    std::vector<std::size_t> n_list = !a.n_list.empty() ? a.n_list : cfg.n_list;
    if (n_list.empty()) n_list = {64, 128, 256, 512};
    const bool corrected = cfg.corrected.value_or(true);
    const StabilityStudy s = stability_experiment(cfg.problem, BdfOrder(k), n_list, trials, seed, corrected);
    if (a.format == "csv") {
        header("stability", {{"k", std::to_string(k)}, {"trials", std::to_string(trials)},
                             {"seed", std::to_string(seed)}, {"corrected", corrected ? "1" : "0"}});
        std::cout << "N,perturbation,energy_ratio,mean_ratio\n";
        for (const StabilityLevel& l : s.levels)
            for (std::size_t i = 0; i < l.energy.size(); ++i)
                std::cout << l.N << ',' << i << ',' << num(l.energy[i]) << ',' << num(l.mean[i]) << '\n';
    } else {
        json levels = json::array();
        for (const StabilityLevel& l : s.levels)
            levels.push_back({{"N", l.N}, {"max_energy_ratio", l.max_energy}, {"max_mean_ratio", l.max_mean},
                              {"max_linearity_error", l.max_linearity_error}, {"energy_ratio", l.energy},
                              {"mean_ratio", l.mean}});
        emit(with_schema("stability", {{"k", k}, {"trials", trials}, {"seed", seed}, {"corrected", corrected},
                                       {"levels", levels}, {"energy_bounded", s.energy_bounded},
                                       {"mean_bounded", s.mean_bounded}, {"linear", s.linear},
                                       {"verdict", s.passed ? "PASS" : "FAIL"}}));
    }
    if (!s.passed) {
        const StabilityLevel& c = s.levels.front();
        const StabilityLevel& f = s.levels.back();
        throw VerdictFailure{{{"check", "stability_bounded"}, {"computed", f.max_energy},
                              {"expected", 2.0 * c.max_energy}, {"mean_computed", f.max_mean},
                              {"mean_expected", 2.0 * c.max_mean}, {"linear", s.linear}}};
    }
}

// --- verify-paper -------------------------------------------------------------------------------

struct VerifyArgs {
    std::uint64_t seed = 20240611;
    std::vector<int> criteria;
    bool full = false;
    bool timings = false;
};

void run_verify(const VerifyArgs& a) {
    VerifyOptions opt;
    opt.seed = a.seed;
    std::vector<int> ids = a.criteria;
    if (ids.empty())
        for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
    json list = json::array();
    bool ok = true;
    std::vector<CheckResult> failures;
    for (int id : ids) {
        const CriterionResult r = verify_criterion(id, opt);
        json j = to_json(r, a.full);
        if (!a.timings) j.erase("seconds");
        list.push_back(j);
        ok = ok && r.passed;
        for (const CheckResult& c : r.checks)
            if (!c.passed) failures.push_back(c);
    }
    emit(with_schema("verify-paper", {{"seed", a.seed}, {"criteria", list}, {"passed", ok}}));
    if (!ok) {
        json f = to_json(failures.front());
        f["failed_checks"] = failures.size();
        throw VerdictFailure{f};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional BDF-k coefficients, stability checks and corrected time stepping"};
    app.require_subcommand(1);

    CoeffsArgs coeffs;
    auto* c_coeffs = app.add_subcommand("coeffs", "Quadrature weights l_j and g_j");
    c_coeffs->add_option("--k", coeffs.k, "BDF order (1-6)")->required();
    c_coeffs->add_option("--alpha", coeffs.alpha, "fractional order in (0, 1]")->required();
    c_coeffs->add_option("--sigma", coeffs.sigma, "substantial parameter >= 0");
    c_coeffs->add_option("--tau", coeffs.tau, "time step > 0");
    c_coeffs->add_option("--n", coeffs.n, "highest index J");
    c_coeffs->add_option("--format", coeffs.format, "csv or json");

    CoeffsArgs mult;
    mult.k = 3;
    auto* c_mult = app.add_subcommand("multipliers", "Multipliers mu_j, reciprocal series c_m and composite q_j");
    c_mult->add_option("--k", mult.k, "BDF order (1-6)")->required();
    c_mult->add_option("--alpha", mult.alpha, "fractional order used for q_j");
    c_mult->add_option("--sigma", mult.sigma, "substantial parameter >= 0");
    c_mult->add_option("--tau", mult.tau, "time step > 0");
    c_mult->add_option("--n", mult.n, "highest index J");
    c_mult->add_option("--format", mult.format, "csv or json");

    PositivityArgs pos;
    auto* c_pos = app.add_subcommand("check-positivity", "Generating-function minimum, Toeplitz sandwich, energy bound");
    c_pos->add_option("--k", pos.k, "BDF order (3-6)")->required();
    c_pos->add_option("--sigma", pos.sigma, "substantial parameter >= 0");
    c_pos->add_option("--tau", pos.tau, "time step > 0");
    c_pos->add_option("--N", pos.N, "Toeplitz dimensions")->delimiter(',');
    c_pos->add_option("--trials", pos.trials, "random sequences for the energy bound");
    c_pos->add_option("--length", pos.length, "sequence length for the energy bound");
    c_pos->add_option("--seed", pos.seed, "random seed");
    c_pos->add_option("--grid", pos.grid, "points of the CSV curve");
    c_pos->add_option("--format", pos.format, "json (report) or csv (curve)");

    AStabilityArgs ast;
    auto* c_ast = app.add_subcommand("check-astability", "Argument sweep of q(e^{ix}) over (0, pi]");
    c_ast->add_option("--k", ast.k, "BDF order (3-6)")->required();
    c_ast->add_option("--alpha", ast.alpha, "fractional order in (0, 1]")->required();
    c_ast->add_option("--sigma", ast.sigma, "substantial parameter >= 0");
    c_ast->add_option("--tau", ast.tau, "time step > 0");
    c_ast->add_option("--grid", ast.grid, "grid size M (x_i = i pi / M)");
    c_ast->add_option("--format", ast.format, "json (report) or csv (sweep)");

    PositivityArgs toe;
    toe.format = "csv";
    auto* c_toe = app.add_subcommand("toeplitz", "Extreme eigenvalues of the symmetrized multiplier matrix");
    c_toe->add_option("--k", toe.k, "BDF order (3-6)")->required();
    c_toe->add_option("--sigma", toe.sigma, "substantial parameter >= 0");
    c_toe->add_option("--tau", toe.tau, "time step > 0");
    c_toe->add_option("--N", toe.N, "matrix dimensions")->delimiter(',');
    c_toe->add_option("--format", toe.format, "csv or json");

    SolveArgs solve;
    auto* c_solve = app.add_subcommand("solve", "Run the corrected BDF-k scheme on a configured problem");
    c_solve->add_option("--config", solve.config, "JSON experiment file")->required()->check(CLI::ExistingFile);
    c_solve->add_option("--k", solve.k, "BDF order (overrides the config)");
    c_solve->add_option("--n", solve.n, "number of steps N (overrides the config)");
    c_solve->add_flag("--no-correction", solve.no_correction, "drop the starting corrections");
    c_solve->add_option("--columns", solve.columns, "states or norms");
    c_solve->add_option("--out,--format", solve.format, "csv or json");

    ConvergeArgs conv;
    auto* c_conv = app.add_subcommand("converge", "Observed orders on the scalar problem");
    c_conv->add_option("--k", conv.k, "BDF order (1-6)")->required();
    c_conv->add_option("--alpha", conv.alpha, "fractional order in (0, 1]")->required();
    c_conv->add_option("--sigma", conv.sigma, "substantial parameter >= 0");
    c_conv->add_option("--lambda", conv.lambda, "scalar operator A = lambda > 0");
    c_conv->add_option("--T", conv.T, "horizon");
    c_conv->add_option("--n-list", conv.n_list, "increasing step counts")->delimiter(',');
    c_conv->add_option("--precision", conv.precision, "quad or double");
    c_conv->add_option("--format", conv.format, "csv or json");

    StabilityArgs stab;
    auto* c_stab = app.add_subcommand("stability", "Perturbation growth across time-step refinement");
    c_stab->add_option("--config", stab.config, "JSON experiment file")->required()->check(CLI::ExistingFile);
    c_stab->add_option("--k", stab.k, "BDF order (3-6, overrides the config)");
    c_stab->add_option("--trials", stab.trials, "number of perturbations");
    auto* seed_opt = c_stab->add_option("--seed", stab.seed, "random seed");
    c_stab->add_option("--n-list", stab.n_list, "refinement sequence")->delimiter(',');
    c_stab->add_option("--format", stab.format, "json or csv");

    VerifyArgs ver;
    auto* c_ver = app.add_subcommand("verify-paper", "Run the full verification battery");
    c_ver->add_option("--seed", ver.seed, "random seed");
    c_ver->add_option("--criterion", ver.criteria, "run only these criteria (1-9)")->delimiter(',');
    c_ver->add_flag("--full", ver.full, "list every check, not only failures");
    c_ver->add_flag("--timings", ver.timings, "include wall-clock seconds per criterion");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_coeffs->parsed()) run_coeffs(coeffs);
        if (c_mult->parsed()) run_multipliers(mult);
        if (c_pos->parsed()) run_check_positivity(pos);
        if (c_ast->parsed()) run_check_astability(ast);
        if (c_toe->parsed()) run_toeplitz(toe);
        if (c_solve->parsed()) run_solve(solve);
        if (c_conv->parsed()) run_converge(conv);
        if (c_stab->parsed()) {
            stab.seed_given = seed_opt->count() > 0;
            run_stability(stab);
        }
        if (c_ver->parsed()) run_verify(ver);
    } catch (const VerdictFailure& f) {
        json rec = f.record;
        rec["error"] = "verdict_failed";
        std::cerr << rec.dump() << '\n';
        return 1;
    } catch (const ConsistencyError& e) {
        std::cerr << json{{"error", "consistency"}, {"check", e.check()},     {"computed", e.computed()},
                          {"expected", e.expected()}, {"tolerance", e.tolerance()}, {"message", e.what()}}
                         .dump()
                  << '\n';
        return 3;
    } catch (const GridTooCoarse& e) {
        std::cerr << json{{"error", "grid_too_coarse"}, {"message", e.what()}}.dump() << '\n';
        return 3;
    } catch (const ParameterError& e) {
        std::cerr << json{{"error", "parameter"}, {"message", e.what()}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
        return 4;
    }
    return 0;
}
