#pragma once

// Multipliers (mu_1, ..., mu_k) for the energy argument, the reciprocal series of
// mu(zeta) = 1 - sum_j mu_j (e^{-sigma tau} zeta)^j and the composite coefficients
// of q(zeta) = g(zeta) / mu(zeta).

#include "fracbdf/coefficients.hpp"
#include "fracbdf/rational.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace fracbdf {

struct MultiplierSet {
    BdfOrder k{1};
    std::vector<Rational> mu;  // mu_1..mu_m, trailing zeros dropped; empty for k = 1, 2

    std::vector<double> values() const;

    /// Ascending coefficients of mu(zeta): [1, -mu_1 e^{-sigma tau}, -mu_2 e^{-2 sigma tau}, ...].
    std::vector<double> polynomial(double sigma, double tau) const;

    /// Complex roots of mu(zeta) in the zeta variable.
    std::vector<std::complex<double>> roots(double sigma, double tau) const;
};

/// Multiplier tuples for BDF3..BDF6; the empty tuple for BDF1 and BDF2.
MultiplierSet multiplier_set(BdfOrder k);

struct ReciprocalSeries {
    BdfOrder k{1};
    double sigma = 0.0;
    double tau = 1.0;
    std::vector<double> c;  // 1/mu(zeta) = sum_m c_m zeta^m
};

/// Expansion of 1/mu(zeta) by formal power-series division. For k >= 3 the
/// result is checked against closed_form_reciprocal(); a relative disagreement
/// above 1e-13 throws ConsistencyError.
ReciprocalSeries reciprocal_series(BdfOrder k, double sigma, double tau, std::size_t J);

/// c_m from the closed forms: (1/2)^m (k = 3, 4), (m+1)/2^m (k = 5),
/// (243*18^{m-1} - 15^{m+1} + 25*10^{m-1}) / 30^m (k = 6), each times e^{-sigma m tau}.
std::vector<double> closed_form_reciprocal(BdfOrder k, double sigma, double tau, std::size_t J);

struct QTable {
    BdfOrder k{1};
    double alpha = 0.5;
    double sigma = 0.0;
    double tau = 1.0;
    std::vector<double> q;
};

/// q_j = sum_{m=0}^{j} c_m g_{j-m} for j = 0..J.
QTable q_coefficients(const CoefficientTable& g, const MultiplierSet& mu, std::size_t J);

/// Discrete convolution truncated to the first `length` terms.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b,
                             std::size_t length);

}  // namespace fracbdf
