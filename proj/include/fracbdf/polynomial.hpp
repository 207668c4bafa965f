#pragma once

#include <complex>
#include <vector>

namespace fracbdf {

/// Evaluates sum_i coeffs[i] x^i (ascending order) by Horner's rule.
template <class T>
T polyval(const std::vector<double>& coeffs, const T& x) {
    T acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + T(*it);
    return acc;
}

/// Ascending coefficients of the derivative.
std::vector<double> polyder(const std::vector<double>& coeffs);

/// All complex roots of sum_i coeffs[i] x^i: eigenvalues of the companion
/// matrix followed by a few Newton steps on the original polynomial.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

/// Real roots in [lo, hi], ascending. Roots with |imag| <= imag_tol count as real.
std::vector<double> real_roots_in(const std::vector<double>& coeffs, double lo, double hi,
                                  double imag_tol = 1e-8);

}  // namespace fracbdf
