#include "fracbdf/multipliers.hpp"

#include "fracbdf/errors.hpp"
#include "fracbdf/real.hpp"
#include "fracbdf/polynomial.hpp"

#include <cmath>
#include <sstream>

namespace fracbdf {

std::vector<double> MultiplierSet::values() const {
    std::vector<double> v;
    v.reserve(mu.size());
    for (const Rational& r : mu) v.push_back(r.value());
    return v;
}

std::vector<double> MultiplierSet::polynomial(double sigma, double tau) const {
    std::vector<double> p{1.0};
    const double damp = std::exp(-sigma * tau);
    double power = 1.0;
    for (const Rational& r : mu) {
        power *= damp;
        p.push_back(-r.value() * power);
    }
    return p;
}

std::vector<std::complex<double>> MultiplierSet::roots(double sigma, double tau) const {
    return polynomial_roots(polynomial(sigma, tau));
}

MultiplierSet multiplier_set(BdfOrder k) {
    MultiplierSet set;
    set.k = k;
    switch (k.value()) {
        case 3:
        case 4: set.mu = {Rational(1, 2)}; break;
        case 5: set.mu = {Rational(1), Rational(-1, 4)}; break;
        case 6: set.mu = {Rational(43, 30), Rational(-2, 3), Rational(1, 10)}; break;
        default: break;
    }
    return set;
}

std::vector<double> closed_form_reciprocal(BdfOrder k, double sigma, double tau, std::size_t J) {
    std::vector<double> c(J + 1);
    for (std::size_t m = 0; m <= J; ++m) {
        const double md = static_cast<double>(m);
        const double damp = std::exp(-sigma * md * tau);
        double base = 0.0;
        switch (k.value()) {
            case 3:
            case 4: base = std::pow(0.5, md); break;
            case 5: base = (md + 1.0) * std::pow(0.5, md); break;
            case 6:
                // Same expression divided through by 30^m so that nothing overflows:
                // 243/18 (3/5)^m - 15 (1/2)^m + 25/10 (1/3)^m.
                base = 13.5 * std::pow(0.6, md) - 15.0 * std::pow(0.5, md) + 2.5 * std::pow(1.0 / 3.0, md);
                break;
            default: base = (m == 0) ? 1.0 : 0.0; break;
        }
        c[m] = base * damp;
    }
    return c;
}

ReciprocalSeries reciprocal_series(BdfOrder k, double sigma, double tau, std::size_t J) {
    if (!(sigma >= 0.0)) throw ParameterError("sigma must be >= 0");
    if (!(tau > 0.0)) throw ParameterError("tau must be > 0");

    const MultiplierSet set = multiplier_set(k);
    // 1/mu: c_0 = 1, c_m = sum_{j>=1} mu_j c_{m-j}. The division runs in the
    // undamped variable and in binary128 from the exact rationals; the result is
    // scaled by e^{-sigma m tau} afterwards. In double the rounding of mu_j is
    // amplified by the nearby BDF6 roots 5/3 and 2 to about m * 2e-15.
    std::vector<Quad> mu;
    for (const Rational& r : set.mu) mu.push_back(r.value<Quad>());
    std::vector<Quad> cq(J + 1, Quad(0));
    cq[0] = 1;
    for (std::size_t m = 1; m <= J; ++m)
        for (std::size_t j = 1; j <= mu.size() && j <= m; ++j) cq[m] += mu[j - 1] * cq[m - j];
    ReciprocalSeries series{k, sigma, tau, std::vector<double>(J + 1, 0.0)};
    std::vector<double>& c = series.c;
    for (std::size_t m = 0; m <= J; ++m) c[m] = static_cast<double>(cq[m]);
    if (sigma > 0.0)
        for (std::size_t m = 1; m <= J; ++m) c[m] *= std::exp(-sigma * static_cast<double>(m) * tau);

    if (k.value() >= 3) {
        const std::vector<double> closed = closed_form_reciprocal(k, sigma, tau, J);
        for (std::size_t m = 0; m <= J; ++m) {
            if (closed[m] == 0.0 && c[m] == 0.0) continue;
            const double rel = std::abs(c[m] - closed[m]) / std::abs(closed[m]);
            if (!(rel <= 1e-13)) {
                std::ostringstream os;
                os << "reciprocal series of mu(zeta) for BDF" << k.value() << " disagrees with its closed form at m="
                   << m << ": division " << c[m] << ", closed form " << closed[m];
                throw ConsistencyError("reciprocal_series_closed_form", c[m], closed[m], 1e-13, os.str());
            }
        }
    }
    return series;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b,
                             std::size_t length) {
    std::vector<double> out(length, 0.0);
    for (std::size_t j = 0; j < length; ++j) {
        double acc = 0.0;
        const std::size_t top = std::min(j, a.size() == 0 ? 0 : a.size() - 1);
        for (std::size_t m = 0; m <= top; ++m) {
            if (j - m < b.size()) acc += a[m] * b[j - m];
        }
        out[j] = acc;
    }
    return out;
}

QTable q_coefficients(const CoefficientTable& g, const MultiplierSet& mu, std::size_t J) {
    if (g.g.size() < J + 1) {
        std::ostringstream os;
        os << "q_coefficients: coefficient table covers indices 0.." << g.max_index() << ", need 0.." << J;
        throw ParameterError(os.str());
    }
    if (mu.k.value() != g.k.value()) throw ParameterError("q_coefficients: BDF order of multipliers and table differ");

    QTable table{g.k, g.alpha, g.sigma, g.tau, {}};
    const ReciprocalSeries c = reciprocal_series(g.k, g.sigma, g.tau, J);
    table.q = convolve(c.c, g.g, J + 1);
    return table;
}

}  // namespace fracbdf
