#pragma once

// Numerical certification of the positivity property (P) of the multipliers
// and of the A-stability property (A) of the pair (g, mu).

#include "fracbdf/coefficients.hpp"
#include "fracbdf/multipliers.hpp"
#include "fracbdf/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fracbdf {

/// f(x) = t[0] + sum_{j>=1} t[j] cos(j x).
struct TrigPolynomial {
    std::vector<double> t;

    double operator()(double x) const;
};

/// Diagonal shift mu_0 used to split the multiplier quadratic form:
/// -1/2 (k = 3, 4), -3/4 (k = 5), -23/24 (k = 6).
Rational positivity_shift(BdfOrder k);

/// Lower constant c_k = 1 + mu_0 of the multiplier energy inequality.
Rational energy_constant(BdfOrder k);

/// Generating function of (L + L^T)/2, where L is the lower-triangular band
/// Toeplitz matrix with entries l_{i,i-j} = -mu_j e^{-sigma j tau} (mu_0 shifted):
///     f(x) = -mu_0 - sum_{j>=1} mu_j e^{-sigma j tau} cos(j x).
TrigPolynomial positivity_generating_function(BdfOrder k, double sigma, double tau);

struct Extremum {
    double x = 0.0;
    double value = 0.0;
};

/// Global minimum of f on [lo, hi]: dense sampling followed by golden-section
/// refinement of the best bracket to `tol` in x.
Extremum minimize_on(const std::function<double(double)>& f, double lo, double hi, std::size_t grid,
                     double tol);
Extremum maximize_on(const std::function<double(double)>& f, double lo, double hi, std::size_t grid,
                     double tol);

/// Minimum / maximum of an even trigonometric polynomial over [0, pi].
Extremum trig_min(const TrigPolynomial& f, std::size_t grid_size = 4096, double refine_tol = 1e-12);
Extremum trig_max(const TrigPolynomial& f, std::size_t grid_size = 4096, double refine_tol = 1e-12);

/// N x N lower-triangular band Toeplitz matrix L of the multiplier quadratic form.
class ToeplitzBand {
public:
    ToeplitzBand(BdfOrder k, double sigma, double tau, std::size_t N);

    std::size_t size() const noexcept { return n_; }
    /// band()[j] = l_{i, i-j}, j = 0..m.
    const std::vector<double>& band() const noexcept { return band_; }
    double entry(std::size_t i, std::size_t j) const;
    /// Row-major dense (L + L^T)/2.
    std::vector<double> symmetric_part() const;

private:
    std::size_t n_;
    std::vector<double> band_;
};

struct ToeplitzCheck {
    std::size_t N = 0;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double f_min = 0.0;
    double f_max = 0.0;
    bool positive_definite = false;
    bool passed = false;
};

/// Extreme eigenvalues of (L + L^T)/2 against the extrema of its generating
/// function. A sandwich violation beyond 1e-10 throws ConsistencyError.
ToeplitzCheck toeplitz_eigencheck(BdfOrder k, double sigma, double tau, std::size_t N);

/// Outcome of a randomized quadratic-form inequality check.
struct QuadraticFormCheck {
    bool passed = true;
    std::size_t trials = 0;
    double worst_slack = 0.0;        // min over trials of lhs - rhs
    std::size_t worst_trial = 0;
    std::vector<double> witness;     // offending sequence (row n = w^{n+1}), empty when passed
};

/// sum_n <w^n, w^n - sum_j mu_j e^{-sigma j tau} w^{n-j}> - c_k sum_n |w^n|^2 with
/// w^j = 0 for j <= 0. `w` holds N rows of length `dim`.
double multiplier_energy_slack(BdfOrder k, double sigma, double tau, std::span<const double> w,
                               std::size_t N, std::size_t dim);

/// Seeded Gaussian trials of multiplier_energy_slack >= -1e-10.
QuadraticFormCheck multiplier_energy_check(BdfOrder k, double sigma, double tau, std::size_t N,
                                           std::size_t trials, std::uint64_t seed, std::size_t dim = 1);

/// sum_{n=1}^{N} ( sum_{j=0}^{n-1} q_j v^{n-j}, v^n ).
double quadrature_quadratic_form(const QTable& q, std::span<const double> v, std::size_t N,
                                 std::size_t dim);

/// Seeded Gaussian trials of quadrature_quadratic_form >= -1e-10 * sum |v^n|^2.
QuadraticFormCheck quadrature_positivity_check(const QTable& q, std::size_t N, std::size_t trials,
                                               std::uint64_t seed, std::size_t dim = 1);

/// Angles of the factored q(e^{ix}) at one point, z = e^{-sigma tau} e^{ix}:
///   theta[0] = arg(1 - z), theta[1] = arg R_k(z) with (1 - z) R_k(z) the BDF
///   polynomial, theta[2..] = arg 1/(1 - r z) for each factor of mu.
/// For BDF5 the double factor (1 - z/2)^2 is a single entry theta[2].
struct ThetaPoint {
    std::array<double, 5> theta{};
    int count = 0;
    double a = 0.0;  // Re R_k(z)
    double b = 0.0;  // -Im R_k(z)
};

ThetaPoint theta_components(BdfOrder k, double sigma, double tau, double x);

/// Coefficients (ascending in z) of R_k(z) = BDF polynomial / (1 - z).
std::vector<double> residual_polynomial(BdfOrder k);

/// Linear factors of mu: mu(z) = prod_i (1 - r_i z)^{m_i} in the damped variable.
struct MuFactor {
    double r;
    int multiplicity;
};
std::vector<MuFactor> mu_factors(BdfOrder k);

struct ArgumentSweep {
    int k = 3;
    double alpha = 0.5;
    double sigma = 0.0;
    double tau = 1.0;
    std::vector<double> x;
    std::vector<double> arg;
    std::vector<ThetaPoint> theta;  // unwrapped
    double max_arg = 0.0;
    double min_arg = 0.0;
    double max_abs_arg = 0.0;
    double x_at_max_abs = 0.0;
    double limit_at_zero = 0.0;     // x -> 0+ limit (-alpha pi / 2 when sigma = 0)
    std::size_t unwrap_corrections = 0;
};

/// Sweeps arg q(e^{ix}) = alpha (theta_1 + theta_2) + sum theta_mu over the grid
/// x_i = i pi / M, i = 1..M. Throws GridTooCoarse if adjacent composite values
/// differ by more than pi/2 after unwrapping.
ArgumentSweep argument_sweep(BdfOrder k, double alpha, double sigma, double tau, std::size_t grid_size);

/// Composite angle sum at alpha = 1, sigma = 0 (the worst case of the A-stability argument).
double composite_angle(BdfOrder k, double x);

/// Sum of the multiplier angles at sigma = 0 (delta(x) for BDF6).
double multiplier_angle(BdfOrder k, double x);

/// One verified constant of the A-stability / positivity proofs.
struct ExtremumRecord {
    std::string name;
    std::string relation;  // ">", "<", "=" or "~" (location check)
    double location = 0.0;
    double value = 0.0;
    double bound = 0.0;
    double tolerance = 0.0;
    double margin = 0.0;
    bool passed = false;
};

/// Auxiliary polynomials of the A-stability argument, ascending coefficients in y = cos x.
std::vector<double> derivative_numerator(BdfOrder k);     // h(y) for k = 3..6
std::vector<double> bdf6_delta_numerator();                // p(y) = 135y^3 - 429y^2 + 420y - 120
std::vector<double> bdf6_positivity_cubic();               // -2/5 xi^3 + 4/3 xi^2 - 17/15 xi + 7/24

/// Locates every extremum the proofs rely on for BDF-k (sigma = 0) and checks
/// the printed constants and root locations.
std::vector<ExtremumRecord> lower_bound_extrema(BdfOrder k);

/// Minimum relative margin required of the printed proof constants.
inline constexpr double kConstantMargin = 1e-4;

}  // namespace fracbdf
