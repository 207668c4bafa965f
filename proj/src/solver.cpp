#include "fracbdf/solver.hpp"

#include "fracbdf/errors.hpp"
#include "fracbdf/real.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracbdf {

CorrectionWeights correction_weights(BdfOrder k) {
    CorrectionWeights c;
    c.k = k;
    switch (k.value()) {
        case 1: break;
        case 2: c.a = {Rational(1, 2)}; break;
        case 3: c.a = {Rational(11, 12), Rational(-5, 12)}; break;
        case 4: c.a = {Rational(31, 24), Rational(-7, 6), Rational(3, 8)}; break;
        case 5: c.a = {Rational(1181, 720), Rational(-177, 80), Rational(341, 240), Rational(-251, 720)}; break;
        default:
            c.a = {Rational(2837, 1440), Rational(-2543, 720), Rational(17, 5), Rational(-1201, 720),
                   Rational(95, 288)};
            break;
    }
    return c;
}

template <class Real>
void SubdiffusionProblem<Real>::validate() const {
    if (rho.size() != A.size()) {
        std::ostringstream os;
        os << "initial datum has " << rho.size() << " entries, operator dimension is " << A.size();
        throw ParameterError(os.str());
    }
    if (!(T > Real(0))) throw ParameterError("horizon T must be positive");
    time_op.validate();
}

template <class Real>
SolveResult<Real> step_solve(const SubdiffusionProblem<Real>& problem, BdfOrder k, std::size_t N, bool corrected) {
    using std::abs;
    using std::exp;
    using std::sqrt;
    problem.validate();
    if (N < static_cast<std::size_t>(k.value())) {
        std::ostringstream os;
        os << "step_solve: N = " << N << " is smaller than the BDF order " << k.value();
        throw ParameterError(os.str());
    }

    const std::size_t dim = problem.A.size();
    const Real tau = problem.T / Real(static_cast<long long>(N));
    const Real sigma = problem.sigma();
    const DiscreteTimeOperator<Real> op = discretize<Real>(problem.time_op, k, tau, N);
    const auto solver = problem.A.shifted_solver(op.zero_weight());
    const std::vector<Real> a_rho = problem.A.apply(problem.rho);
    const CorrectionWeights corr = correction_weights(k);

    SolveResult<Real> r;
    r.k = k;
    r.N = N;
    r.dim = dim;
    r.tau = tau;
    r.corrected = corrected;
    r.times.resize(N + 1);
    r.u.assign((N + 1) * dim, Real(0));
    r.w.assign((N + 1) * dim, Real(0));
    r.residuals.reserve(N);
    std::copy(problem.rho.begin(), problem.rho.end(), r.u.begin());

    std::vector<Real> rhs(dim);
    for (std::size_t n = 1; n <= N; ++n) {
        const Real tn = tau * Real(static_cast<long long>(n));
        r.times[n] = tn;
        const Real damp = sigma == Real(0) ? Real(1) : exp(-sigma * tn);
        const Real factor = -damp * (Real(1) + (corrected ? corr.template at<Real>(n) : Real(0)));
        const std::vector<Real> hist = op.apply_history(std::span<const Real>(r.w.data(), n * dim), n, dim);
        for (std::size_t d = 0; d < dim; ++d) rhs[d] = factor * a_rho[d] - hist[d];

        const std::vector<Real> wn = solver.solve(rhs);
        std::copy(wn.begin(), wn.end(), r.w.begin() + static_cast<std::ptrdiff_t>(n * dim));

        // Relative residual of (zero_weight I + A) w^n = rhs.
        const std::vector<Real> aw = problem.A.apply(wn);
        Real res(0);
        Real scale(0);
        for (std::size_t d = 0; d < dim; ++d) {
            const Real e = op.zero_weight() * wn[d] + aw[d] - rhs[d];
            res += e * e;
            scale += rhs[d] * rhs[d];
        }
        r.residuals.push_back(scale > Real(0) ? static_cast<double>(sqrt(res / scale)) : static_cast<double>(sqrt(res)));

        for (std::size_t d = 0; d < dim; ++d) r.u[n * dim + d] = wn[d] + damp * problem.rho[d];
    }
    return r;
}

template struct SubdiffusionProblem<double>;
template struct SubdiffusionProblem<Quad>;
template SolveResult<double> step_solve<double>(const SubdiffusionProblem<double>&, BdfOrder, std::size_t, bool);
template SolveResult<Quad> step_solve<Quad>(const SubdiffusionProblem<Quad>&, BdfOrder, std::size_t, bool);

}  // namespace fracbdf
