#pragma once

// Convergence study on the scalar problem and the perturbation-growth
// experiment for the energy-stability bounds.

#include "fracbdf/real.hpp"
#include "fracbdf/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fracbdf {

struct ConvergenceStudy {
    int k = 1;
    double alpha = 0.5;
    double sigma = 0.0;
    double lambda = 1.0;
    double T = 1.0;
    Precision precision = Precision::Quad;
    std::vector<std::size_t> N;
    std::vector<double> error_corrected;
    std::vector<double> error_uncorrected;
    std::vector<double> order_corrected;    // order_*[i] from N[i] -> N[i+1]
    std::vector<double> order_uncorrected;
};

/// Terminal error |u^N - u(T)| of the scalar single-term problem (rho = 1) for
/// each N, with and without starting corrections, plus successive observed orders.
ConvergenceStudy convergence_harness(BdfOrder k, double alpha, double sigma, double lambda,
                                     const std::vector<std::size_t>& N_list, Precision precision = Precision::Quad,
                                     double T = 1.0);

/// log(e_i / e_{i+1}) / log(N_{i+1} / N_i).
std::vector<double> observed_orders(const std::vector<std::size_t>& N, const std::vector<double>& errors);

struct StabilityRatios {
    double energy = 0.0;  // tau sum ||e^n||^2 / (tau sum ||e^0||^2)
    double mean = 0.0;    // tau sum ||e^n|| / (T ||e^0||)
};

/// Ratios of the perturbation e^n = u^n(rho + e0) - u^n(rho), measured in the A^{1/2} norm.
/// `linearity_error` (optional) receives max_n |e^n - S(e0)^n| / max(1, max |e0|), where S
/// applies the scheme to e0 directly.
StabilityRatios stability_ratios(const SubdiffusionProblem<double>& problem, BdfOrder k, std::size_t N,
                                 const std::vector<double>& e0, bool corrected = true,
                                 double* linearity_error = nullptr);

struct StabilityLevel {
    std::size_t N = 0;
    std::vector<double> energy;
    std::vector<double> mean;
    double max_energy = 0.0;
    double max_mean = 0.0;
    double max_linearity_error = 0.0;
};

struct StabilityStudy {
    int k = 3;
    std::size_t perturbations = 0;
    std::uint64_t seed = 0;
    std::vector<StabilityLevel> levels;
    bool energy_bounded = false;  // finest max <= 2 x coarsest max
    bool mean_bounded = false;
    bool linear = false;          // linearity error <= 1e-12 everywhere
    bool passed = false;
};

/// Seeded Gaussian perturbations e0 (one draw per perturbation, reused on every level).
StabilityStudy stability_experiment(const SubdiffusionProblem<double>& problem, BdfOrder k,
                                    const std::vector<std::size_t>& N_list, std::size_t perturbations,
                                    std::uint64_t seed, bool corrected = true);

}  // namespace fracbdf
