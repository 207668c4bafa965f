#include "fracbdf/polynomial.hpp"

#include "fracbdf/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace fracbdf {

std::vector<double> polyder(const std::vector<double>& coeffs) {
    std::vector<double> d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * static_cast<double>(i));
    return d;
}

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
    std::vector<double> c = coeffs;
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    if (c.size() < 2) return {};
    const int n = static_cast<int>(c.size()) - 1;

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw ConsistencyError("companion_eigensolve", 0, 0, 0, "companion matrix eigensolve failed");

    const std::vector<double> d = polyder(c);
    std::vector<std::complex<double>> roots;
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = solver.eigenvalues()[i];
        if (std::abs(z.imag()) < 1e-12 * std::max(1.0, std::abs(z))) z = z.real();
        for (int it = 0; it < 8; ++it) {
            const std::complex<double> dp = polyval(d, z);
            if (dp == 0.0) break;
            const std::complex<double> step = polyval(c, z) / dp;
            z -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
        }
        roots.push_back(z);
    }
    return roots;
}

std::vector<double> real_roots_in(const std::vector<double>& coeffs, double lo, double hi, double imag_tol) {
    std::vector<double> out;
    for (const auto& z : polynomial_roots(coeffs)) {
        if (std::abs(z.imag()) <= imag_tol && z.real() >= lo && z.real() <= hi) out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fracbdf
