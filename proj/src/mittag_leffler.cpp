#include "fracbdf/mittag_leffler.hpp"

#include "fracbdf/errors.hpp"
#include "fracbdf/real.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace fracbdf {

namespace {

template <class Real>
void check_domain(Real alpha, Real z) {
    if (!(alpha > Real(0) && alpha <= Real(1)))
        throw ParameterError("Mittag-Leffler: alpha must lie in (0, 1], got " +
                             std::to_string(static_cast<double>(alpha)));
    if (!(z <= Real(0)))
        throw ParameterError("Mittag-Leffler: only z <= 0 is supported, got " +
                             std::to_string(static_cast<double>(z)));
}

}  // namespace

template <class Real>
SeriesValue<Real> mittag_leffler_series(Real alpha, Real z) {
    using std::abs;
    using std::exp;
    using std::log;
    SeriesValue<Real> s;
    s.value = Real(1);
    s.abs_sum = Real(1);
    s.terms = 1;
    if (z == Real(0)) return s;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real logz = log(abs(z));
    const bool negative = z < Real(0);
    Real previous = Real(1);
    for (std::size_t m = 1; m < 100000; ++m) {
        const Real mr(static_cast<long long>(m));
        const Real mag = exp(mr * logz - boost::math::lgamma(alpha * mr + Real(1)));
        const Real term = (negative && m % 2 == 1) ? -mag : mag;
        s.value += term;
        s.abs_sum += mag;
        s.terms = m + 1;
        // Past overflow the partial sums are meaningless; abs_sum = inf flags the cancellation.
        if (!(s.abs_sum <= std::numeric_limits<Real>::max())) break;
        if (mag < previous && mag <= eps * abs(s.value) * Real(1e-3) && mag <= eps * s.abs_sum * Real(1e-3)) break;
        previous = mag;
    }
    return s;
}

template <class Real>
Real mittag_leffler_integral(Real alpha, Real x) {
    using std::cos;
    using std::pow;
    using std::sin;
    using std::exp;
    if (!(alpha > Real(0) && alpha < Real(1))) throw ParameterError("integral representation needs 0 < alpha < 1");
    if (!(x > Real(0))) throw ParameterError("integral representation needs x > 0");
    const Real pi = boost::math::constants::pi<Real>();
    const Real c = cos(alpha * pi);
    const Real inv_alpha = Real(1) / alpha;
    const auto f = [&](Real y) {
        const Real r = y / x;
        return exp(-pow(y, inv_alpha)) / (r * r + Real(2) * r * c + Real(1));
    };
    const Real tol = std::numeric_limits<Real>::epsilon();
    boost::math::quadrature::tanh_sinh<Real> finite;
    boost::math::quadrature::exp_sinh<Real> tail;
    // Break at y = x (where the denominator is smallest) and at y = 1 (where the exponential turns over).
    // Finite pieces are mapped onto the native interval [-1, 1].
    const auto piece = [&](Real a, Real b) {
        const Real half = (b - a) / Real(2);
        return half * finite.integrate([&](Real t) { return f(a + half * (t + Real(1))); }, Real(-1), Real(1), tol);
    };
    Real integral(0);
    if (x > Real(1)) {
        integral += piece(Real(0), Real(1));
        integral += piece(Real(1), x);
    } else {
        integral += piece(Real(0), x);
    }
    integral += tail.integrate(f, x, std::numeric_limits<Real>::infinity(), tol);
    return sin(alpha * pi) / (alpha * pi * x) * integral;
}

template <class Real>
Real mittag_leffler(Real alpha, Real z) {
    using std::abs;
    using std::exp;
    check_domain(alpha, z);
    if (alpha == Real(1)) return exp(z);
    if (z == Real(0)) return Real(1);
    if (abs(z) <= Real(5)) {
        const SeriesValue<Real> s = mittag_leffler_series(alpha, z);
        // 0 < E_alpha(z) <= 1 here, so a partial sum above 1 is cancellation debris.
        using std::min;
        if (s.abs_sum <= Real(1e3) * min(abs(s.value), Real(1))) return s.value;
    }
    return mittag_leffler_integral(alpha, -z);
}

template <class Real>
Real exact_scalar_solution(Real lambda, Real alpha, Real sigma, Real rho, Real t) {
    using std::exp;
    using std::pow;
    if (!(lambda > Real(0))) throw ParameterError("exact_scalar_solution: lambda must be positive");
    if (!(t >= Real(0))) throw ParameterError("exact_scalar_solution: t must be nonnegative");
    if (t == Real(0)) return rho;
    return exp(-sigma * t) * mittag_leffler(alpha, -lambda * pow(t, alpha)) * rho;
}

template SeriesValue<double> mittag_leffler_series<double>(double, double);
template SeriesValue<Quad> mittag_leffler_series<Quad>(Quad, Quad);
template double mittag_leffler_integral<double>(double, double);
template Quad mittag_leffler_integral<Quad>(Quad, Quad);
template double mittag_leffler<double>(double, double);
template Quad mittag_leffler<Quad>(Quad, Quad);
template double exact_scalar_solution<double>(double, double, double, double, double);
template Quad exact_scalar_solution<Quad>(Quad, Quad, Quad, Quad, Quad);

}  // namespace fracbdf
