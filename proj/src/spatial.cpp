#include "fracbdf/spatial.hpp"

#include "fracbdf/errors.hpp"
#include "fracbdf/real.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fracbdf {

template <class Real>
SpatialOperator<Real> SpatialOperator<Real>::scalar(Real lambda) {
    if (!(lambda > Real(0))) throw ParameterError("scalar operator needs lambda > 0");
    SpatialOperator op;
    op.kind_ = Kind::Scalar;
    op.n_ = 1;
    op.lambda_ = lambda;
    return op;
}

template <class Real>
SpatialOperator<Real> SpatialOperator<Real>::tridiagonal(std::size_t nx, Real length) {
    if (nx < 1) throw ParameterError("tridiagonal operator needs at least one interior point");
    if (!(length > Real(0))) throw ParameterError("tridiagonal operator needs a positive interval length");
    SpatialOperator op;
    op.kind_ = Kind::Tridiagonal;
    op.n_ = nx;
    op.h_ = length / Real(static_cast<long long>(nx + 1));
    op.diag_ = Real(2) / (op.h_ * op.h_);
    op.off_ = Real(-1) / (op.h_ * op.h_);
    return op;
}

template <class Real>
SpatialOperator<Real> SpatialOperator<Real>::dense(std::vector<Real> matrix, std::size_t n) {
    using std::abs;
    if (n < 1 || matrix.size() != n * n) throw ParameterError("dense operator: matrix must be n x n with n >= 1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const Real a = matrix[i * n + j];
            const Real b = matrix[j * n + i];
            if (abs(a - b) > Real(1e-12) * (abs(a) + abs(b) + Real(1)))
                throw ParameterError("dense operator must be symmetric");
        }
    SpatialOperator op;
    op.kind_ = Kind::Dense;
    op.n_ = n;
    op.dense_ = std::move(matrix);
    // A Cholesky factorization exists iff the symmetric matrix is positive definite.
    (void)op.shifted_solver(Real(0));
    return op;
}

template <class Real>
std::vector<Real> SpatialOperator<Real>::apply(std::span<const Real> v) const {
    if (v.size() != n_) throw ParameterError("spatial operator: vector length mismatch");
    std::vector<Real> out(n_);
    switch (kind_) {
        case Kind::Scalar: out[0] = lambda_ * v[0]; break;
        case Kind::Tridiagonal:
            for (std::size_t i = 0; i < n_; ++i) {
                Real acc = diag_ * v[i];
                if (i > 0) acc += off_ * v[i - 1];
                if (i + 1 < n_) acc += off_ * v[i + 1];
                out[i] = acc;
            }
            break;
        case Kind::Dense:
            for (std::size_t i = 0; i < n_; ++i) {
                Real acc(0);
                for (std::size_t j = 0; j < n_; ++j) acc += dense_[i * n_ + j] * v[j];
                out[i] = acc;
            }
            break;
    }
    return out;
}

template <class Real>
Real SpatialOperator<Real>::dot(std::span<const Real> a, std::span<const Real> b) const {
    if (a.size() != b.size()) throw ParameterError("dot: length mismatch");
    Real acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

template <class Real>
Real SpatialOperator<Real>::euclidean_norm(std::span<const Real> v) const {
    using std::sqrt;
    return sqrt(dot(v, v));
}

template <class Real>
Real SpatialOperator<Real>::energy_norm(std::span<const Real> v) const {
    using std::sqrt;
    const std::vector<Real> av = apply(v);
    const Real e = dot(av, v);
    return sqrt(e > Real(0) ? e : Real(0));
}

template <class Real>
Real SpatialOperator<Real>::dual_norm(std::span<const Real> v) const {
    using std::sqrt;
    const std::vector<Real> x = shifted_solver(Real(0)).solve(v);
    const Real e = dot(x, v);
    return sqrt(e > Real(0) ? e : Real(0));
}

template <class Real>
typename SpatialOperator<Real>::ShiftedSolver SpatialOperator<Real>::shifted_solver(Real c) const {
    using std::sqrt;
    ShiftedSolver s;
    s.kind_ = kind_;
    s.n_ = n_;
    s.off_ = off_;
    s.shift_ = c;
    switch (kind_) {
        case Kind::Scalar:
            if (!(c + lambda_ > Real(0))) throw ParameterError("shifted scalar system is not positive");
            s.diag_ = {c + lambda_};
            break;
        case Kind::Tridiagonal: {
            // Thomas forward sweep on constant (off, diag + c, off).
            s.diag_.resize(n_);
            s.upper_.resize(n_);
            Real d = diag_ + c;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i > 0) d = diag_ + c - off_ * s.upper_[i - 1];
                if (!(d > Real(0))) throw ParameterError("shifted tridiagonal system is not positive definite");
                s.diag_[i] = d;
                s.upper_[i] = off_ / d;
            }
            break;
        }
        case Kind::Dense: {
            std::vector<Real> L(n_ * n_, Real(0));
            for (std::size_t j = 0; j < n_; ++j) {
                Real djj = dense_[j * n_ + j] + c;
                for (std::size_t p = 0; p < j; ++p) djj -= L[j * n_ + p] * L[j * n_ + p];
                if (!(djj > Real(0))) {
                    std::ostringstream os;
                    os << "matrix is not symmetric positive definite (pivot " << j << " = "
                       << static_cast<double>(djj) << ")";
                    throw ParameterError(os.str());
                }
                const Real ljj = sqrt(djj);
                L[j * n_ + j] = ljj;
                for (std::size_t i = j + 1; i < n_; ++i) {
                    Real acc = dense_[i * n_ + j];
                    for (std::size_t p = 0; p < j; ++p) acc -= L[i * n_ + p] * L[j * n_ + p];
                    L[i * n_ + j] = acc / ljj;
                }
            }
            s.diag_ = std::move(L);
            break;
        }
    }
    return s;
}

template <class Real>
std::vector<Real> SpatialOperator<Real>::ShiftedSolver::solve(std::span<const Real> rhs) const {
    const std::size_t n = n_;
    if (rhs.size() != n) throw ParameterError("shifted solve: right-hand side length mismatch");
    std::vector<Real> x(rhs.begin(), rhs.end());
    switch (kind_) {
        case Kind::Scalar: x[0] /= diag_[0]; break;
        case Kind::Tridiagonal:
            x[0] /= diag_[0];
            for (std::size_t i = 1; i < n; ++i) x[i] = (x[i] - off_ * x[i - 1]) / diag_[i];
            for (std::size_t i = n - 1; i-- > 0;) x[i] -= upper_[i] * x[i + 1];
            break;
        case Kind::Dense:
            for (std::size_t i = 0; i < n; ++i) {
                Real acc = x[i];
                for (std::size_t p = 0; p < i; ++p) acc -= diag_[i * n + p] * x[p];
                x[i] = acc / diag_[i * n + i];
            }
            for (std::size_t i = n; i-- > 0;) {
                Real acc = x[i];
                for (std::size_t p = i + 1; p < n; ++p) acc -= diag_[p * n + i] * x[p];
                x[i] = acc / diag_[i * n + i];
            }
            break;
    }
    return x;
}

double dirichlet_laplacian_min_eigenvalue(std::size_t nx, double length) {
    const double h = length / static_cast<double>(nx + 1);
    const double s = std::sin(std::numbers::pi * h / (2.0 * length));
    return 4.0 / (h * h) * s * s;
}

template class SpatialOperator<double>;
template class SpatialOperator<Quad>;

}  // namespace fracbdf
