#include "fracbdf/coefficients.hpp"

#include "fracbdf/errors.hpp"
#include "fracbdf/real.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

namespace fracbdf {

BdfOrder::BdfOrder(int k) : k_(k) {
    if (k < 1 || k > 6) throw ParameterError("BDF order must lie in [1, 6], got " + std::to_string(k));
}

void validate_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw ParameterError("fractional order alpha must lie in (0, 1], got " + std::to_string(alpha));
}

void FracParams::validate() const {
    validate_alpha(alpha);
    if (!(sigma >= 0.0)) throw ParameterError("sigma must be >= 0, got " + std::to_string(sigma));
    if (!(tau > 0.0)) throw ParameterError("tau must be > 0, got " + std::to_string(tau));
}

namespace {

struct Frac {
    long long num;
    long long den;
};

// Starting value l_m = base^alpha * sum_p poly[p] alpha^p (poly indexed by power of alpha).
struct RecurrenceRule {
    Frac base;                             // sum_{j<=k} 1/j
    std::vector<Frac> weight;              // printed factor in front of the i-th recurrence term
    std::vector<std::vector<Frac>> start;  // l_0 .. l_{k-1}
};

// The recurrence reads l_j = sum_{i=1}^{k} weight_i * s_i(j) * l_{j-i} with
//   s_i(j) = 1 - i(alpha+1)/j   (i odd),
//   s_i(j) = i(alpha+1)/j - 1   (i even).
const RecurrenceRule& recurrence_rule(int k) {
    static const std::vector<RecurrenceRule> rules = {
        // BDF1
        {{1, 1}, {{1, 1}}, {{{1, 1}}}},
        // BDF2
        {{3, 2}, {{4, 3}, {1, 3}}, {{{1, 1}}, {{0, 1}, {-4, 3}}}},
        // BDF3
        {{11, 6},
         {{18, 11}, {18, 22}, {2, 11}},
         {{{1, 1}}, {{0, 1}, {-18, 11}}, {{0, 1}, {-63, 121}, {162, 121}}}},
        // BDF4
        {{25, 12},
         {{48, 25}, {36, 25}, {16, 25}, {3, 25}},
         {{{1, 1}},
          {{0, 1}, {-48, 25}},
          {{0, 1}, {-252, 625}, {1152, 625}},
          {{0, 1}, {-3664, 15625}, {12096, 15625}, {-18432, 15625}}}},
        // BDF5
        {{137, 60},
         {{300, 137}, {300, 137}, {200, 137}, {75, 137}, {12, 137}},
         {{{1, 1}},
          {{0, 1}, {-300, 137}},
          {{0, 1}, {-3900, 18769}, {45000, 18769}},
          {{0, 1}, {-423800, 2571353}, {1170000, 2571353}, {-4500000, 2571353}},
          {{0, 1}, {-103893525, 352275361}, {134745000, 352275361}, {-175500000, 352275361},
           {337500000, 352275361}}}},
        // BDF6
        {{147, 60},
         {{360, 147}, {450, 147}, {400, 147}, {225, 147}, {72, 147}, {10, 147}},
         {{{1, 1}},
          {{0, 1}, {-360, 147}},
          {{0, 1}, {150, 2401}, {7200, 2401}},
          {{0, 1}, {-42400, 352947}, {-18000, 117649}, {-288000, 117649}},
          {{0, 1}, {-2603575, 5764801}, {1707250, 5764801}, {1080000, 5764801}, {8640000, 5764801}},
          {{0, 1}, {-94994224, 282475249}, {310309000, 282475249}, {-14730000, 40353607},
           {-43200000, 282475249}, {-207360000, 282475249}}}},
    };
    return rules[static_cast<std::size_t>(k - 1)];
}

template <class Real>
Real frac(const Frac& f) {
    return Real(f.num) / Real(f.den);
}

template <class Real>
void check_alpha(const Real& alpha) {
    if (!(alpha > Real(0) && alpha <= Real(1)))
        throw ParameterError("fractional order alpha must lie in (0, 1], got " +
                             std::to_string(static_cast<double>(alpha)));
}

}  // namespace

template <class Real>
std::vector<Real> bdf_l_coefficients(BdfOrder order, Real alpha, std::size_t J) {
    using std::pow;
    check_alpha(alpha);
    if constexpr (std::is_same_v<Real, double>) {
        // Late weights are small differences of O(1) terms; accumulating in
        // binary128 keeps each rounded entry accurate relative to itself.
        const std::vector<Quad> q = bdf_l_coefficients<Quad>(order, Quad(alpha), J);
        return std::vector<double>(q.begin(), q.end());
    }
    const int k = order.value();
    const RecurrenceRule& rule = recurrence_rule(k);
    const Real scale = pow(frac<Real>(rule.base), alpha);

    std::vector<Real> l(J + 1);
    const std::size_t starts = std::min<std::size_t>(static_cast<std::size_t>(k), J + 1);
    for (std::size_t m = 0; m < starts; ++m) {
        // Horner in alpha.
        const std::vector<Frac>& poly = rule.start[m];
        Real acc(0);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * alpha + frac<Real>(*it);
        l[m] = scale * acc;
    }

    const Real ap1 = alpha + Real(1);
    // At alpha = 1 the generating function is the BDF polynomial itself: every
    // l_j with j > k vanishes and the recurrence would only produce roundoff.
    const std::size_t top = alpha == Real(1) ? std::min<std::size_t>(J, static_cast<std::size_t>(k)) : J;
    for (std::size_t j = static_cast<std::size_t>(k); j <= top; ++j) {
        const Real jr(static_cast<long long>(j));
        Real acc(0);
        for (int i = 1; i <= k; ++i) {
            const Real shift = Real(i) * ap1 / jr;
            const Real s = (i % 2 == 1) ? Real(1) - shift : shift - Real(1);
            acc += frac<Real>(rule.weight[i - 1]) * s * l[j - i];
        }
        l[j] = acc;
    }
    return l;
}

std::vector<double> bdf_polynomial(BdfOrder order) {
    const int k = order.value();
    std::vector<double> p(k + 1, 0.0);
    for (int j = 1; j <= k; ++j) {
        // (1 - zeta)^j = sum_i C(j, i) (-zeta)^i
        double binom = 1.0;
        for (int i = 0; i <= j; ++i) {
            p[i] += ((i % 2 == 0) ? binom : -binom) / j;
            binom = binom * (j - i) / (i + 1);
        }
    }
    return p;
}

std::vector<double> series_oracle(BdfOrder order, double alpha, std::size_t J) {
    validate_alpha(alpha);
    const int k = order.value();
    // Exact polynomial coefficients, then the recurrence in binary128 (see bdf_l_coefficients).
    std::vector<Quad> p(k + 1, Quad(0));
    for (int j = 1; j <= k; ++j) {
        Quad binom = 1;
        for (int i = 0; i <= j; ++i) {
            p[i] += ((i % 2 == 0) ? binom : -binom) / j;
            binom = binom * (j - i) / (i + 1);
        }
    }

    // Miller: for f = P^alpha, j p_0 f_j = sum_{i=1}^{min(j,k)} ((alpha+1) i - j) p_i f_{j-i}.
    const Quad a = alpha;
    std::vector<Quad> f(J + 1);
    f[0] = pow(p[0], a);
    for (std::size_t j = 1; j <= J; ++j) {
        Quad acc = 0;
        const std::size_t top = std::min<std::size_t>(j, static_cast<std::size_t>(k));
        for (std::size_t i = 1; i <= top; ++i)
            acc += ((a + 1) * static_cast<long long>(i) - static_cast<long long>(j)) * p[i] * f[j - i];
        f[j] = acc / (Quad(static_cast<long long>(j)) * p[0]);
    }
    return std::vector<double>(f.begin(), f.end());
}

template <class Real>
BasicCoefficientTable<Real> bdf_g_coefficients(BdfOrder k, Real alpha, Real sigma, Real tau,
                                               std::size_t J) {
    using std::exp;
    if (!(sigma >= Real(0))) throw ParameterError("sigma must be >= 0");
    if (!(tau > Real(0))) throw ParameterError("tau must be > 0");

    BasicCoefficientTable<Real> table;
    table.k = k;
    table.alpha = alpha;
    table.sigma = sigma;
    table.tau = tau;
    table.l = bdf_l_coefficients<Real>(k, alpha, J);
    table.g.resize(table.l.size());
    for (std::size_t j = 0; j < table.l.size(); ++j) {
        const Real damping = sigma == Real(0) ? Real(1) : exp(-sigma * Real(static_cast<long long>(j)) * tau);
        table.g[j] = damping * table.l[j];
    }
    return table;
}

template std::vector<double> bdf_l_coefficients<double>(BdfOrder, double, std::size_t);
template std::vector<Quad> bdf_l_coefficients<Quad>(BdfOrder, Quad, std::size_t);
template BasicCoefficientTable<double> bdf_g_coefficients<double>(BdfOrder, double, double, double,
                                                                  std::size_t);
template BasicCoefficientTable<Quad> bdf_g_coefficients<Quad>(BdfOrder, Quad, Quad, Quad, std::size_t);

}  // namespace fracbdf
