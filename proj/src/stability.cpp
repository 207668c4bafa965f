#include "fracbdf/stability.hpp"

#include "fracbdf/errors.hpp"
#include "fracbdf/polynomial.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace fracbdf {

namespace {

constexpr double kPi = std::numbers::pi;

void require_multiplier_order(BdfOrder k, const char* what) {
    if (k.value() < 3) {
        std::ostringstream os;
        os << what << " requires BDF order 3..6, got " << k.value();
        throw ParameterError(os.str());
    }
}

Extremum golden_section(const std::function<double(double)>& f, double a, double b, double tol, bool maximize) {
    const double sign = maximize ? -1.0 : 1.0;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = sign * f(c);
    double fd = sign * f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = sign * f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = sign * f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

Extremum optimize_on(const std::function<double(double)>& f, double lo, double hi, std::size_t grid,
                     double tol, bool maximize) {
    if (grid < 3) grid = 3;
    const double sign = maximize ? -1.0 : 1.0;
    std::size_t best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    const double h = (hi - lo) / static_cast<double>(grid - 1);
    for (std::size_t i = 0; i < grid; ++i) {
        const double v = sign * f(lo + h * static_cast<double>(i));
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double a = lo + h * static_cast<double>(best == 0 ? 0 : best - 1);
    const double b = lo + h * static_cast<double>(std::min(best + 1, grid - 1));
    Extremum refined = golden_section(f, a, b, tol, maximize);
    const double x_grid = lo + h * static_cast<double>(best);
    if (sign * refined.value > best_val) refined = {x_grid, f(x_grid)};
    return refined;
}

}  // namespace

double TrigPolynomial::operator()(double x) const {
    double acc = t.empty() ? 0.0 : t[0];
    for (std::size_t j = 1; j < t.size(); ++j) acc += t[j] * std::cos(static_cast<double>(j) * x);
    return acc;
}

Rational positivity_shift(BdfOrder k) {
    switch (k.value()) {
        case 3:
        case 4: return Rational(-1, 2);
        case 5: return Rational(-3, 4);
        case 6: return Rational(-23, 24);
        default: break;
    }
    throw ParameterError("positivity shift is defined for BDF3..BDF6 only");
}

Rational energy_constant(BdfOrder k) {
    const Rational mu0 = positivity_shift(k);
    return Rational(mu0.den() + mu0.num(), mu0.den());
}

TrigPolynomial positivity_generating_function(BdfOrder k, double sigma, double tau) {
    require_multiplier_order(k, "positivity_generating_function");
    const MultiplierSet set = multiplier_set(k);
    TrigPolynomial f;
    f.t.push_back(-positivity_shift(k).value());
    const double damp = std::exp(-sigma * tau);
    double power = 1.0;
    for (const Rational& mu : set.mu) {
        power *= damp;
        f.t.push_back(-mu.value() * power);
    }
    return f;
}

Extremum minimize_on(const std::function<double(double)>& f, double lo, double hi, std::size_t grid, double tol) {
    return optimize_on(f, lo, hi, grid, tol, false);
}

Extremum maximize_on(const std::function<double(double)>& f, double lo, double hi, std::size_t grid, double tol) {
    return optimize_on(f, lo, hi, grid, tol, true);
}

Extremum trig_min(const TrigPolynomial& f, std::size_t grid_size, double refine_tol) {
    return minimize_on([&f](double x) { return f(x); }, 0.0, kPi, grid_size, refine_tol);
}

Extremum trig_max(const TrigPolynomial& f, std::size_t grid_size, double refine_tol) {
    return maximize_on([&f](double x) { return f(x); }, 0.0, kPi, grid_size, refine_tol);
}

ToeplitzBand::ToeplitzBand(BdfOrder k, double sigma, double tau, std::size_t N) : n_(N) {
    band_ = positivity_generating_function(k, sigma, tau).t;
    if (N < band_.size()) {
        std::ostringstream os;
        os << "Toeplitz dimension N must be at least " << band_.size() << " for BDF" << k.value() << ", got " << N;
        throw ParameterError(os.str());
    }
}

double ToeplitzBand::entry(std::size_t i, std::size_t j) const {
    if (j > i) return 0.0;
    const std::size_t d = i - j;
    return d < band_.size() ? band_[d] : 0.0;
}

std::vector<double> ToeplitzBand::symmetric_part() const {
    std::vector<double> h(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        h[i * n_ + i] = band_[0];
        for (std::size_t d = 1; d < band_.size() && d <= i; ++d) {
            h[i * n_ + (i - d)] = 0.5 * band_[d];
            h[(i - d) * n_ + i] = 0.5 * band_[d];
        }
    }
    return h;
}

ToeplitzCheck toeplitz_eigencheck(BdfOrder k, double sigma, double tau, std::size_t N) {
    const ToeplitzBand band(k, sigma, tau, N);
    const std::vector<double> h = band.symmetric_part();
    const Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> H(
        h.data(), static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Eigen::MatrixXd(H), Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success)
        throw ConsistencyError("toeplitz_eigensolve", 0, 0, 0, "symmetric eigensolve failed");

    const TrigPolynomial f = positivity_generating_function(k, sigma, tau);
    ToeplitzCheck check;
    check.N = N;
    check.lambda_min = eig.eigenvalues().minCoeff();
    check.lambda_max = eig.eigenvalues().maxCoeff();
    check.f_min = trig_min(f).value;
    check.f_max = trig_max(f).value;
    check.positive_definite = check.lambda_min > 0.0;

    constexpr double tol = 1e-10;
    if (check.lambda_min < check.f_min - tol) {
        std::ostringstream os;
        os << "lambda_min = " << check.lambda_min << " below f_min = " << check.f_min << " (BDF" << k.value()
           << ", N=" << N << ")";
        throw ConsistencyError("grenander_szego_lower", check.lambda_min, check.f_min, tol, os.str());
    }
    if (check.lambda_max > check.f_max + tol) {
        std::ostringstream os;
        os << "lambda_max = " << check.lambda_max << " above f_max = " << check.f_max << " (BDF" << k.value()
           << ", N=" << N << ")";
        throw ConsistencyError("grenander_szego_upper", check.lambda_max, check.f_max, tol, os.str());
    }
    check.passed = true;
    return check;
}

double multiplier_energy_slack(BdfOrder k, double sigma, double tau, std::span<const double> w, std::size_t N,
                               std::size_t dim) {
    require_multiplier_order(k, "multiplier_energy_slack");
    if (w.size() != N * dim) throw ParameterError("multiplier_energy_slack: sequence length mismatch");
    const std::vector<double> mu = multiplier_set(k).values();
    const double damp = std::exp(-sigma * tau);
    std::vector<double> weight(mu.size());
    double power = 1.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        power *= damp;
        weight[j] = mu[j] * power;
    }
    const double ck = energy_constant(k).value();

    double lhs = 0.0;
    double norms = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        const double* wn = w.data() + n * dim;
        for (std::size_t d = 0; d < dim; ++d) {
            double v = wn[d];
            for (std::size_t j = 1; j <= weight.size() && j <= n; ++j) v -= weight[j - 1] * w[(n - j) * dim + d];
            lhs += wn[d] * v;
            norms += wn[d] * wn[d];
        }
    }
    return lhs - ck * norms;
}

namespace {

template <class Eval>
QuadraticFormCheck randomized_check(std::size_t N, std::size_t dim, std::size_t trials, std::uint64_t seed,
                                    Eval&& eval) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    QuadraticFormCheck check;
    check.trials = trials;
    check.worst_slack = std::numeric_limits<double>::infinity();
    std::vector<double> w(N * dim);
    for (std::size_t t = 0; t < trials; ++t) {
        for (double& x : w) x = normal(rng);
        const auto [slack, threshold] = eval(std::span<const double>(w));
        if (slack < check.worst_slack) {
            check.worst_slack = slack;
            check.worst_trial = t;
        }
        if (slack < threshold && check.passed) {
            check.passed = false;
            check.witness = w;
        }
    }
    if (trials == 0) check.worst_slack = 0.0;
    return check;
}

}  // namespace

QuadraticFormCheck multiplier_energy_check(BdfOrder k, double sigma, double tau, std::size_t N,
                                           std::size_t trials, std::uint64_t seed, std::size_t dim) {
    require_multiplier_order(k, "multiplier_energy_check");
    return randomized_check(N, dim, trials, seed, [&](std::span<const double> w) {
        return std::pair{multiplier_energy_slack(k, sigma, tau, w, N, dim), -1e-10};
    });
}

double quadrature_quadratic_form(const QTable& q, std::span<const double> v, std::size_t N, std::size_t dim) {
    if (q.q.size() < N) throw ParameterError("quadrature_quadratic_form: q must cover indices 0..N-1");
    if (v.size() != N * dim) throw ParameterError("quadrature_quadratic_form: sequence length mismatch");
    double total = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        const double* vn = v.data() + n * dim;
        for (std::size_t j = 0; j <= n; ++j) {
            const double* vm = v.data() + (n - j) * dim;
            double dot = 0.0;
            for (std::size_t d = 0; d < dim; ++d) dot += vm[d] * vn[d];
            total += q.q[j] * dot;
        }
    }
    return total;
}

QuadraticFormCheck quadrature_positivity_check(const QTable& q, std::size_t N, std::size_t trials,
                                               std::uint64_t seed, std::size_t dim) {
    return randomized_check(N, dim, trials, seed, [&](std::span<const double> v) {
        double scale = 0.0;
        for (double x : v) scale += x * x;
        return std::pair{quadrature_quadratic_form(q, v, N, dim), -1e-10 * std::max(1.0, scale)};
    });
}

std::vector<double> residual_polynomial(BdfOrder k) {
    switch (k.value()) {
        case 1: return {1.0};
        case 2: return {1.5, -0.5};
        case 3: return {11.0 / 6.0, -7.0 / 6.0, 2.0 / 6.0};
        case 4: return {25.0 / 12.0, -23.0 / 12.0, 13.0 / 12.0, -3.0 / 12.0};
        case 5: return {137.0 / 60.0, -163.0 / 60.0, 137.0 / 60.0, -63.0 / 60.0, 12.0 / 60.0};
        default: return {147.0 / 60.0, -213.0 / 60.0, 237.0 / 60.0, -163.0 / 60.0, 62.0 / 60.0, -10.0 / 60.0};
    }
}

std::vector<MuFactor> mu_factors(BdfOrder k) {
    switch (k.value()) {
        case 3:
        case 4: return {{0.5, 1}};
        case 5: return {{0.5, 2}};
        case 6: return {{0.6, 1}, {0.5, 1}, {1.0 / 3.0, 1}};
        default: return {};
    }
}

ThetaPoint theta_components(BdfOrder k, double sigma, double tau, double x) {
    const double damp = std::exp(-sigma * tau);
    const std::complex<double> z = std::polar(damp, x);
    ThetaPoint p;

    p.theta[0] = (sigma == 0.0) ? 0.5 * (x - kPi) : std::atan2(-z.imag(), 1.0 - z.real());

    const std::complex<double> r = polyval(residual_polynomial(k), z);
    p.a = r.real();
    p.b = -r.imag();
    if (k.value() == 6) {
        // Two-case branch for BDF6: a_6 <= 0 shifts by -pi.
        if (p.a == 0.0) {
            p.theta[1] = p.b > 0.0 ? -0.5 * kPi : (p.b < 0.0 ? 0.5 * kPi : 0.0);
        } else {
            p.theta[1] = std::atan(-p.b / p.a) - (p.a < 0.0 ? kPi : 0.0);
        }
    } else {
        p.theta[1] = std::atan2(-p.b, p.a);
    }

    p.count = 2;
    for (const MuFactor& f : mu_factors(k)) {
        const double s = f.r * z.imag();
        const double c = 1.0 - f.r * z.real();
        p.theta[static_cast<std::size_t>(p.count++)] = f.multiplicity * std::atan2(s, c);
    }
    return p;
}

ArgumentSweep argument_sweep(BdfOrder k, double alpha, double sigma, double tau, std::size_t grid_size) {
    require_multiplier_order(k, "argument_sweep");
    validate_alpha(alpha);
    if (!(sigma >= 0.0) || !(tau > 0.0)) throw ParameterError("argument_sweep: need sigma >= 0 and tau > 0");
    if (grid_size < 16) throw ParameterError("argument_sweep: grid_size must be at least 16");

    ArgumentSweep sweep;
    sweep.k = k.value();
    sweep.alpha = alpha;
    sweep.sigma = sigma;
    sweep.tau = tau;
    sweep.limit_at_zero = (sigma == 0.0) ? -alpha * kPi / 2.0 : 0.0;
    sweep.x.reserve(grid_size);
    sweep.arg.reserve(grid_size);
    sweep.theta.reserve(grid_size);
    sweep.max_arg = -std::numeric_limits<double>::infinity();
    sweep.min_arg = std::numeric_limits<double>::infinity();

    // At x = 0 every factor is real and positive, so the continuous branch of theta_2 starts at 0.
    double prev_theta2 = 0.0;
    double prev_arg = sweep.limit_at_zero;
    for (std::size_t i = 1; i <= grid_size; ++i) {
        const double x = kPi * static_cast<double>(i) / static_cast<double>(grid_size);
        ThetaPoint p = theta_components(k, sigma, tau, x);
        while (p.theta[1] - prev_theta2 > kPi) {
            p.theta[1] -= 2.0 * kPi;
            ++sweep.unwrap_corrections;
        }
        while (p.theta[1] - prev_theta2 < -kPi) {
            p.theta[1] += 2.0 * kPi;
            ++sweep.unwrap_corrections;
        }
        prev_theta2 = p.theta[1];

        double arg = alpha * (p.theta[0] + p.theta[1]);
        for (int j = 2; j < p.count; ++j) arg += p.theta[static_cast<std::size_t>(j)];

        if (std::abs(arg - prev_arg) > kPi / 2.0) {
            std::ostringstream os;
            os << "argument sweep for BDF" << k.value() << " jumps by " << (arg - prev_arg) << " at x=" << x
               << "; increase grid_size (" << grid_size << ")";
            throw GridTooCoarse(os.str());
        }
        prev_arg = arg;

        sweep.x.push_back(x);
        sweep.arg.push_back(arg);
        sweep.theta.push_back(p);
        sweep.max_arg = std::max(sweep.max_arg, arg);
        sweep.min_arg = std::min(sweep.min_arg, arg);
        if (std::abs(arg) > sweep.max_abs_arg) {
            sweep.max_abs_arg = std::abs(arg);
            sweep.x_at_max_abs = x;
        }
    }
    return sweep;
}

double composite_angle(BdfOrder k, double x) {
    const ThetaPoint p = theta_components(k, 0.0, 1.0, x);
    double sum = 0.0;
    for (int j = 0; j < p.count; ++j) sum += p.theta[static_cast<std::size_t>(j)];
    return sum;
}

double multiplier_angle(BdfOrder k, double x) {
    const ThetaPoint p = theta_components(k, 0.0, 1.0, x);
    double sum = 0.0;
    for (int j = 2; j < p.count; ++j) sum += p.theta[static_cast<std::size_t>(j)];
    return sum;
}

std::vector<double> derivative_numerator(BdfOrder k) {
    switch (k.value()) {
        case 3: return {65, -230, 262, -88};
        case 4: return {82, -862, 1949, -1601, 450};
        case 5: return {-1343, -8407, 43988, -66272, 42348, -9864};
        case 6: return {-199635, -72525, 5908998, -21920022, 38067828, -37146627, 20885463, -6314580, 793800};
        default: break;
    }
    throw ParameterError("derivative_numerator is defined for BDF3..BDF6 only");
}

std::vector<double> bdf6_delta_numerator() { return {-120, 420, -429, 135}; }

std::vector<double> bdf6_positivity_cubic() { return {7.0 / 24.0, -17.0 / 15.0, 4.0 / 3.0, -2.0 / 5.0}; }

namespace {

ExtremumRecord bound_record(std::string name, double location, double value, const char* relation, double bound) {
    ExtremumRecord r;
    r.name = std::move(name);
    r.relation = relation;
    r.location = location;
    r.value = value;
    r.bound = bound;
    r.tolerance = kConstantMargin;
    const double gap = (r.relation == ">") ? value - bound : bound - value;
    r.margin = gap / std::abs(bound);
    r.passed = r.margin >= kConstantMargin;
    return r;
}

ExtremumRecord close_record(std::string name, double location, double value, double expected, double tol) {
    ExtremumRecord r;
    r.name = std::move(name);
    r.relation = "~";
    r.location = location;
    r.value = value;
    r.bound = expected;
    r.tolerance = tol;
    r.margin = std::abs(value - expected);
    r.passed = r.margin <= tol;
    return r;
}

struct PrintedRoot {
    double y;
    double x;
};

void boundary_records(BdfOrder k, std::vector<ExtremumRecord>& out) {
    const std::string p = "bdf" + std::to_string(k.value());
    out.push_back(close_record(p + ".g(0)=-pi/2", 0.0, composite_angle(k, 0.0), -kPi / 2.0, 1e-9));
    out.push_back(close_record(p + ".g(pi)=0", kPi, composite_angle(k, kPi), 0.0, 1e-9));
}

void root_records(const std::string& prefix, const std::vector<double>& poly, const std::vector<PrintedRoot>& printed,
                  std::vector<double>& roots_out, std::vector<ExtremumRecord>& out) {
    roots_out = real_roots_in(poly, -1.0, 1.0);
    out.push_back(close_record(prefix + ".root_count", 0.0, static_cast<double>(roots_out.size()),
                               static_cast<double>(printed.size()), 0.0));
    for (std::size_t i = 0; i < printed.size() && i < roots_out.size(); ++i) {
        const std::string tag = prefix + ".y" + std::to_string(i + 1);
        out.push_back(close_record(tag, roots_out[i], roots_out[i], printed[i].y, 5e-4));
        out.push_back(close_record(prefix + ".x" + std::to_string(i + 1), std::acos(roots_out[i]),
                                   std::acos(roots_out[i]), printed[i].x, 5e-4));
    }
}

}  // namespace

std::vector<ExtremumRecord> lower_bound_extrema(BdfOrder k) {
    require_multiplier_order(k, "lower_bound_extrema");
    std::vector<ExtremumRecord> out;
    const int kk = k.value();
    const std::string p = "bdf" + std::to_string(kk);
    const auto g = [k](double x) { return composite_angle(k, x); };
    constexpr std::size_t grid = 4096;
    constexpr double xtol = 1e-10;

    if (kk == 3) {
        const std::vector<double> h = derivative_numerator(k);
        const double y_star = (131.0 - std::sqrt(1981.0)) / 132.0;
        const Extremum numeric = minimize_on([&h](double y) { return polyval(h, y); }, -1.0, 1.0, grid, xtol);
        out.push_back(close_record(p + ".h_argmin", numeric.x, numeric.x, y_star, 1e-6));
        out.push_back(bound_record(p + ".h(y*)>2.02", y_star, polyval(h, y_star), ">", 2.02));
        // h > 0 makes g increasing, so its minimum over [0, pi] sits at x = 0.
        const Extremum gmin = minimize_on(g, 0.0, kPi, grid, xtol);
        out.push_back(close_record(p + ".g_argmin_at_0", gmin.x, gmin.x, 0.0, 1e-6));
        boundary_records(k, out);
        return out;
    }

    std::vector<PrintedRoot> printed;
    double g_bound = 0.0;
    if (kk == 4) {
        printed = {{0.1288, 1.4416}, {0.76042, 0.7068}};
        g_bound = -1.37;
    } else if (kk == 5) {
        printed = {{-0.0996, 1.6705}, {0.6531, 0.8591}};
        g_bound = -1.33;
    } else {
        printed = {{-0.1391, 1.7103}, {0.5015, 1.0455}};
        g_bound = -1.566;
    }

    std::vector<double> roots;
    root_records(p + ".h", derivative_numerator(k), printed, roots, out);
    if (roots.size() == 2) {
        const double x1 = std::acos(roots[0]);
        const double x2 = std::acos(roots[1]);
        out.push_back(bound_record(p + ".g(x1)>" + std::to_string(g_bound).substr(0, 6), x1, g(x1), ">", g_bound));
        // g decreases on (x2, x1) and increases on (x1, pi): its minimum over [x2, pi] must sit at x1.
        const Extremum local = minimize_on(g, x2, kPi, grid, xtol);
        out.push_back(close_record(p + ".g_local_argmin", local.x, local.x, x1, 1e-6));
        if (kk == 6) {
            const ThetaPoint tp = theta_components(k, 0.0, 1.0, x1);
            out.push_back(bound_record(p + ".a6(x1)<0", x1, tp.a, "<", 0.0));
            out.back().margin = -tp.a;
            out.back().passed = tp.a < 0.0;
        }
    }
    boundary_records(k, out);

    if (kk == 6) {
        std::vector<double> proots;
        root_records(p + ".p", bdf6_delta_numerator(), {{0.5041, 1.0425}}, proots, out);
        if (proots.size() == 1) {
            const double x1 = std::acos(proots[0]);
            out.push_back(bound_record(p + ".delta(x1)<1.5", x1, multiplier_angle(k, x1), "<", 1.5));
            const Extremum dmax = maximize_on([k](double x) { return multiplier_angle(k, x); }, 0.0, kPi, grid, xtol);
            out.push_back(close_record(p + ".delta_argmax", dmax.x, dmax.x, x1, 1e-6));
        }

        const std::vector<double> cubic = bdf6_positivity_cubic();
        const double xi_star = (20.0 - std::sqrt(94.0)) / 18.0;
        const Extremum cmin = minimize_on([&cubic](double xi) { return polyval(cubic, xi); }, -1.0, 1.0, grid, xtol);
        out.push_back(close_record(p + ".p_argmin", cmin.x, cmin.x, xi_star, 1e-6));
        out.push_back(bound_record(p + ".p(xi*)>0.004785", xi_star, polyval(cubic, xi_star), ">", 0.004785));
        const Extremum fmin = trig_min(positivity_generating_function(k, 0.0, 1.0));
        out.push_back(close_record(p + ".f_argmin", fmin.x, fmin.x, std::acos(xi_star), 1e-6));
    }
    return out;
}

}  // namespace fracbdf
