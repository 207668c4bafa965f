#pragma once

// Convolution-quadrature weights of the fractional BDF-k rule.
//
// The generating power series is
//     g(zeta) = ( sum_{j=1}^{k} (1/j) (1 - e^{-sigma tau} zeta)^j )^alpha = sum_j g_j zeta^j,
// with g_j = e^{-sigma j tau} l_j, where l_j are the coefficients of the
// sigma = 0 series. The l_j are produced by explicit order-k recurrences;
// series_oracle() expands the same series along an independent path.

#include <cstddef>
#include <vector>

namespace fracbdf {

/// Step count of a backward difference formula, 1 <= k <= 6.
class BdfOrder {
public:
    explicit BdfOrder(int k);

    constexpr int value() const noexcept { return k_; }
    constexpr operator int() const noexcept { return k_; }

private:
    int k_;
};

/// Fractional exponent, substantial parameter and time step.
struct FracParams {
    double alpha = 0.5;
    double sigma = 0.0;
    double tau = 1.0;

    /// Throws ParameterError unless 0 < alpha <= 1, sigma >= 0, tau > 0.
    void validate() const;
};

/// Throws ParameterError unless 0 < alpha <= 1.
void validate_alpha(double alpha);

/// l_0..l_J from the closed-form starting values and the order-k recurrence.
/// Instantiated for double and Quad.
template <class Real>
std::vector<Real> bdf_l_coefficients(BdfOrder k, Real alpha, std::size_t J);

/// l_0..l_J by expanding sum_{j<=k} (1/j)(1 - zeta)^j binomially and raising the
/// polynomial to the power alpha with the J.C.P. Miller power-series recurrence.
std::vector<double> series_oracle(BdfOrder k, double alpha, std::size_t J);

/// Weights l_j and damped weights g_j = e^{-sigma j tau} l_j for one (k, alpha, sigma, tau).
template <class Real>
struct BasicCoefficientTable {
    BdfOrder k{1};
    Real alpha{};
    Real sigma{};
    Real tau{};
    std::vector<Real> l;
    std::vector<Real> g;

    /// Highest available index J (the tables hold J + 1 entries).
    std::size_t max_index() const noexcept { return l.empty() ? 0 : l.size() - 1; }
};

using CoefficientTable = BasicCoefficientTable<double>;

template <class Real>
BasicCoefficientTable<Real> bdf_g_coefficients(BdfOrder k, Real alpha, Real sigma, Real tau,
                                               std::size_t J);

inline CoefficientTable bdf_g_coefficients(BdfOrder k, const FracParams& p, std::size_t J) {
    return bdf_g_coefficients<double>(k, p.alpha, p.sigma, p.tau, J);
}

/// Coefficients p_0..p_k of the classical BDF-k polynomial sum_{j<=k} (1/j)(1 - zeta)^j.
std::vector<double> bdf_polynomial(BdfOrder k);

}  // namespace fracbdf
