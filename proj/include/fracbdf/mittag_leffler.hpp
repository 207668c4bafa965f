#pragma once

// Mittag-Leffler function E_alpha(z) = sum_m z^m / Gamma(alpha m + 1) on the
// negative real axis, the exact-solution kernel of the scalar model problem.

#include <cstddef>

namespace fracbdf {

template <class Real>
struct SeriesValue {
    Real value{};
    Real abs_sum{};  // sum of |terms|; abs_sum / |value| measures cancellation
    std::size_t terms = 0;
};

/// Truncated power series, summed until the terms fall below machine precision.
template <class Real>
SeriesValue<Real> mittag_leffler_series(Real alpha, Real z);

/// E_alpha(-x) = sin(alpha pi) / (alpha pi x) int_0^inf exp(-y^{1/alpha}) / ((y/x)^2 + 2 (y/x) cos(alpha pi) + 1) dy
/// for 0 < alpha < 1 and x > 0 (double-exponential quadrature).
template <class Real>
Real mittag_leffler_integral(Real alpha, Real x);

/// E_alpha(z) for 0 < alpha <= 1 and z <= 0. The series is used while its
/// cancellation factor abs_sum / min(|value|, 1) stays below 1e3, the integral representation otherwise;
/// alpha = 1 returns exp(z).
template <class Real>
Real mittag_leffler(Real alpha, Real z);

/// u(t) = e^{-sigma t} E_alpha(-lambda t^alpha) rho.
template <class Real>
Real exact_scalar_solution(Real lambda, Real alpha, Real sigma, Real rho, Real t);

}  // namespace fracbdf
