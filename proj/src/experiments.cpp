#include "fracbdf/experiments.hpp"

#include "fracbdf/errors.hpp"
#include "fracbdf/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fracbdf {

std::vector<double> observed_orders(const std::vector<std::size_t>& N, const std::vector<double>& errors) {
    std::vector<double> orders;
    for (std::size_t i = 0; i + 1 < N.size() && i + 1 < errors.size(); ++i)
        orders.push_back(std::log(errors[i] / errors[i + 1]) /
                         std::log(static_cast<double>(N[i + 1]) / static_cast<double>(N[i])));
    return orders;
}

namespace {

template <class Real>
void run_convergence(ConvergenceStudy& study, BdfOrder k) {
    using std::abs;
    SubdiffusionProblem<Real> p;
    p.A = SpatialOperator<Real>::scalar(Real(study.lambda));
    p.rho = {Real(1)};
    p.T = Real(study.T);
    p.time_op.variant = SingleTerm{study.alpha};
    p.time_op.sigma = study.sigma;
    const Real exact =
        exact_scalar_solution<Real>(Real(study.lambda), Real(study.alpha), Real(study.sigma), Real(1), Real(study.T));
    for (std::size_t N : study.N) {
        const SolveResult<Real> c = step_solve<Real>(p, k, N, true);
        const SolveResult<Real> u = step_solve<Real>(p, k, N, false);
        study.error_corrected.push_back(static_cast<double>(abs(c.state(N)[0] - exact)));
        study.error_uncorrected.push_back(static_cast<double>(abs(u.state(N)[0] - exact)));
    }
}

}  // namespace

ConvergenceStudy convergence_harness(BdfOrder k, double alpha, double sigma, double lambda,
                                     const std::vector<std::size_t>& N_list, Precision precision, double T) {
    validate_alpha(alpha);
    if (N_list.empty()) throw ParameterError("convergence_harness: empty N list");
    for (std::size_t i = 1; i < N_list.size(); ++i)
        if (N_list[i] <= N_list[i - 1]) throw ParameterError("convergence_harness: N list must be increasing");
    ConvergenceStudy study;
    study.k = k.value();
    study.alpha = alpha;
    study.sigma = sigma;
    study.lambda = lambda;
    study.T = T;
    study.precision = precision;
    study.N = N_list;
    if (precision == Precision::Quad)
        run_convergence<Quad>(study, k);
    else
        run_convergence<double>(study, k);
    study.order_corrected = observed_orders(study.N, study.error_corrected);
    study.order_uncorrected = observed_orders(study.N, study.error_uncorrected);
    return study;
}

StabilityRatios stability_ratios(const SubdiffusionProblem<double>& problem, BdfOrder k, std::size_t N,
                                 const std::vector<double>& e0, bool corrected, double* linearity_error) {
    if (e0.size() != problem.A.size()) throw ParameterError("stability_ratios: perturbation length mismatch");
    SubdiffusionProblem<double> perturbed = problem;
    for (std::size_t d = 0; d < e0.size(); ++d) perturbed.rho[d] += e0[d];
    const SolveResult<double> base = step_solve(problem, k, N, corrected);
    const SolveResult<double> pert = step_solve(perturbed, k, N, corrected);
    const std::size_t dim = e0.size();
    const double norm0 = problem.A.energy_norm(e0);
    std::vector<double> en(dim);
    double sum_sq = 0.0;
    double sum = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        for (std::size_t d = 0; d < dim; ++d) en[d] = pert.state(n)[d] - base.state(n)[d];
        const double e = problem.A.energy_norm(en);
        sum_sq += e * e;
        sum += e;
    }
    if (linearity_error) {
        SubdiffusionProblem<double> direct = problem;
        direct.rho = e0;
        const SolveResult<double> s = step_solve(direct, k, N, corrected);
        double worst = 0.0;
        double scale = 1.0;
        for (double x : e0) scale = std::max(scale, std::abs(x));
        for (std::size_t n = 0; n <= N; ++n)
            for (std::size_t d = 0; d < dim; ++d)
                worst = std::max(worst, std::abs(pert.state(n)[d] - base.state(n)[d] - s.state(n)[d]));
        *linearity_error = worst / scale;
    }
    StabilityRatios r;
    if (norm0 > 0.0) {
        const double tau = problem.T / static_cast<double>(N);
        r.energy = (tau * sum_sq) / (tau * static_cast<double>(N) * norm0 * norm0);
        r.mean = (tau * sum) / (problem.T * norm0);
    }
    return r;
}

StabilityStudy stability_experiment(const SubdiffusionProblem<double>& problem, BdfOrder k,
                                    const std::vector<std::size_t>& N_list, std::size_t perturbations,
                                    std::uint64_t seed, bool corrected) {
    if (k.value() < 3) throw ParameterError("stability_experiment targets BDF3..BDF6");
    if (N_list.empty()) throw ParameterError("stability_experiment: empty N list");
    problem.validate();

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<std::vector<double>> draws(perturbations, std::vector<double>(problem.A.size()));
    for (auto& e : draws)
        for (double& x : e) x = normal(rng);

    StabilityStudy study;
    study.k = k.value();
    study.perturbations = perturbations;
    study.seed = seed;
    study.linear = true;
    for (std::size_t N : N_list) {
        StabilityLevel level;
        level.N = N;
        for (const auto& e0 : draws) {
            double lin = 0.0;
            const StabilityRatios r = stability_ratios(problem, k, N, e0, corrected, &lin);
            level.energy.push_back(r.energy);
            level.mean.push_back(r.mean);
            level.max_energy = std::max(level.max_energy, r.energy);
            level.max_mean = std::max(level.max_mean, r.mean);
            level.max_linearity_error = std::max(level.max_linearity_error, lin);
        }
        if (level.max_linearity_error > 1e-12) study.linear = false;
        study.levels.push_back(std::move(level));
    }
    const StabilityLevel& coarse = study.levels.front();
    const StabilityLevel& fine = study.levels.back();
    study.energy_bounded = fine.max_energy <= 2.0 * coarse.max_energy;
    study.mean_bounded = fine.max_mean <= 2.0 * coarse.max_mean;
    study.passed = study.energy_bounded && study.mean_bounded && study.linear;
    return study;
}

}  // namespace fracbdf
