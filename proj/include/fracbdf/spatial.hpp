#pragma once

// Symmetric positive definite spatial operators A and the norms they induce:
// |v| (Euclidean), ||v|| = |A^{1/2} v| and ||v||_* = |A^{-1/2} v|.

#include <cstddef>
#include <span>
#include <vector>

namespace fracbdf {

template <class Real>
class SpatialOperator {
public:
    enum class Kind { Scalar, Tridiagonal, Dense };

    /// A = lambda > 0 acting on R^1.
    static SpatialOperator scalar(Real lambda);
    /// Central-difference Dirichlet Laplacian on (0, length) with nx interior points.
    static SpatialOperator tridiagonal(std::size_t nx, Real length = Real(1));
    /// Row-major n x n matrix; rejected unless symmetric positive definite.
    static SpatialOperator dense(std::vector<Real> matrix, std::size_t n);

    Kind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return n_; }
    /// Grid spacing of the tridiagonal variant (0 otherwise).
    Real spacing() const noexcept { return h_; }

    std::vector<Real> apply(std::span<const Real> v) const;
    Real dot(std::span<const Real> a, std::span<const Real> b) const;
    Real euclidean_norm(std::span<const Real> v) const;
    /// sqrt((A v, v)).
    Real energy_norm(std::span<const Real> v) const;
    /// sqrt((A^{-1} v, v)).
    Real dual_norm(std::span<const Real> v) const;

    /// Factorization of c I + A, formed once and reused for every right-hand side.
    class ShiftedSolver {
    public:
        std::vector<Real> solve(std::span<const Real> rhs) const;
        Real shift() const noexcept { return shift_; }

    private:
        friend class SpatialOperator;
        Kind kind_ = Kind::Scalar;
        std::size_t n_ = 1;
        Real off_{};
        Real shift_{};
        std::vector<Real> diag_;   // Thomas: modified diagonal; Dense: Cholesky factor (row-major, lower)
        std::vector<Real> upper_;  // Thomas: modified super-diagonal ratios
    };

    /// Throws ParameterError if c I + A is not positive definite.
    ShiftedSolver shifted_solver(Real c) const;

private:
    Kind kind_ = Kind::Scalar;
    std::size_t n_ = 1;
    Real lambda_{};            // Scalar value
    Real h_{};                 // Tridiagonal spacing
    Real off_{};               // Tridiagonal off-diagonal entry -1/h^2
    Real diag_{};              // Tridiagonal diagonal entry 2/h^2
    std::vector<Real> dense_;  // Dense matrix, row-major
};

/// Smallest eigenvalue of the tridiagonal Dirichlet Laplacian: (4/h^2) sin^2(pi h / (2 length)).
double dirichlet_laplacian_min_eigenvalue(std::size_t nx, double length);

}  // namespace fracbdf
