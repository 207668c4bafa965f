#pragma once

// Corrected BDF-k time stepping for P(d_t)(u - e^{-sigma t} rho) + A u = 0, u(0) = rho.
// With w = u - e^{-sigma t} rho the scheme reads
//     P(d_tau) w^n + A w^n = -e^{-sigma n tau} (1 + a_n) A rho,   w^0 = 0,
// where a_n are the starting corrections (n = 1..k-1) and a_n = 0 afterwards.

#include "fracbdf/coefficients.hpp"
#include "fracbdf/operators.hpp"
#include "fracbdf/rational.hpp"
#include "fracbdf/spatial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fracbdf {

struct CorrectionWeights {
    BdfOrder k{1};
    std::vector<Rational> a;  // a_1..a_{k-1}

    /// a_n as a real, 0 outside 1..k-1.
    template <class Real = double>
    Real at(std::size_t n) const {
        return (n >= 1 && n <= a.size()) ? a[n - 1].template value<Real>() : Real(0);
    }
};

CorrectionWeights correction_weights(BdfOrder k);

template <class Real>
struct SubdiffusionProblem {
    SpatialOperator<Real> A = SpatialOperator<Real>::scalar(Real(1));
    std::vector<Real> rho;
    Real T = Real(1);
    FractionalOperatorSpec time_op;  // carries sigma

    Real sigma() const { return Real(time_op.sigma); }
    void validate() const;
};

template <class Real>
struct SolveResult {
    BdfOrder k{1};
    std::size_t N = 0;
    std::size_t dim = 0;
    Real tau{};
    bool corrected = true;
    std::vector<Real> times;      // t_0..t_N
    std::vector<Real> u;          // (N + 1) rows of length dim
    std::vector<Real> w;          // w^n = u^n - e^{-sigma t_n} rho
    std::vector<double> residuals;  // relative residual of each implicit solve, n = 1..N

    std::span<const Real> state(std::size_t n) const { return {u.data() + n * dim, dim}; }
    std::span<const Real> shifted_state(std::size_t n) const { return {w.data() + n * dim, dim}; }
};

/// tau = T / N; requires N >= k.
template <class Real>
SolveResult<Real> step_solve(const SubdiffusionProblem<Real>& problem, BdfOrder k, std::size_t N, bool corrected);

}  // namespace fracbdf
