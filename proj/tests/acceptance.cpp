// Acceptance battery: one PASS/FAIL line per criterion, exit status nonzero if any fails.

#include "fracbdf/coefficients.hpp"
#include "fracbdf/experiments.hpp"
#include "fracbdf/multipliers.hpp"
#include "fracbdf/solver.hpp"
#include "fracbdf/stability.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#ifndef FRACBDF_CLI_PATH
#error "FRACBDF_CLI_PATH must name the fbdf executable"
#endif

using namespace fracbdf;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what;
        ok = ok && cond;
    }
};

int run(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        std::ostringstream w;
        w << "runtime " << secs << " s exceeds " << limit_seconds << " s";
        out.require(false, w.str());
    }
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
                out.note.str().empty() ? "" : " -- ", out.note.str().c_str());
    std::fflush(stdout);
    return out.ok ? 0 : 1;
}

void coefficient_oracle(Outcome& o) {
    for (int k = 1; k <= 6; ++k)
        for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
            const auto l = bdf_l_coefficients<double>(BdfOrder(k), alpha, 512);
            const auto ref = series_oracle(BdfOrder(k), alpha, 512);
            for (std::size_t j = 0; j <= 512; ++j) {
                // l_j = 0 exactly for alpha = 1, j > k; there the oracle's roundoff is bounded absolutely.
                const bool exact_zero = alpha == 1.0 && j > static_cast<std::size_t>(k);
                const double err = std::abs(l[j] - ref[j]) / (exact_zero ? 1.0 : std::abs(ref[j]));
                std::ostringstream w;
                w << "k=" << k << " alpha=" << alpha << " j=" << j << " err=" << err;
                o.require(err <= 1e-12 && (!exact_zero || l[j] == 0.0), w.str());
            }
        }
}

void table_exactness(Outcome& o) {
    const std::vector<std::vector<Rational>> mu = {
        {}, {}, {Rational(1, 2)}, {Rational(1, 2)}, {Rational(1), Rational(-1, 4)},
        {Rational(43, 30), Rational(-2, 3), Rational(1, 10)}};
    const std::vector<std::vector<Rational>> a = {
        {},
        {Rational(1, 2)},
        {Rational(11, 12), Rational(-5, 12)},
        {Rational(31, 24), Rational(-7, 6), Rational(3, 8)},
        {Rational(1181, 720), Rational(-177, 80), Rational(341, 240), Rational(-251, 720)},
        {Rational(2837, 1440), Rational(-2543, 720), Rational(17, 5), Rational(-1201, 720), Rational(95, 288)}};
    for (int k = 1; k <= 6; ++k) {
        o.require(multiplier_set(BdfOrder(k)).mu == mu[k - 1], "multipliers k=" + std::to_string(k));
        o.require(correction_weights(BdfOrder(k)).a == a[k - 1], "corrections k=" + std::to_string(k));
    }
    for (int k = 3; k <= 6; ++k)
        for (double st : {0.0, 0.5}) {
            const auto closed = closed_form_reciprocal(BdfOrder(k), st, 1.0, 512);
            // Long division of 1 by mu(zeta) in extended precision, independent of the library routine.
            const auto mu = multiplier_set(BdfOrder(k)).mu;
            std::vector<long double> cl(513, 0.0L);
            cl[0] = 1.0L;
            for (std::size_t m = 1; m <= 512; ++m)
                for (std::size_t j = 1; j <= mu.size() && j <= m; ++j) cl[m] += mu[j - 1].value<long double>() * cl[m - j];
            std::vector<double> c(513);
            for (std::size_t m = 0; m <= 512; ++m)
                c[m] = static_cast<double>(cl[m] * std::exp(-st * static_cast<long double>(m)));
            for (std::size_t m = 0; m <= 512; ++m)
                o.require(std::abs(c[m] - closed[m]) <= 1e-13 * std::abs(closed[m]),
                          "reciprocal k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
}

void positivity_constants(Outcome& o) {
    for (int k = 3; k <= 4; ++k) {
        const Extremum m = trig_min(positivity_generating_function(BdfOrder(k), 0.0, 1.0));
        o.require(std::abs(m.value) <= 1e-12 && std::abs(m.x) <= 1e-6, "minimum at 0, k=" + std::to_string(k));
    }
    const TrigPolynomial f5 = positivity_generating_function(BdfOrder(5), 0.0, 1.0);
    const Extremum m5 = trig_min(f5);
    o.require(std::abs(m5.value) <= 1e-12, "k=5 minimum 0");
    for (int i = 0; i < 4096; ++i) {
        const double x = kPi * i / 4095.0;
        const double lower = 0.5 * (1.0 - std::cos(x)) * (1.0 - std::cos(x));
        o.require(f5(x) >= lower - 1e-14, "k=5 pointwise bound at i=" + std::to_string(i));
    }
    const Extremum m6 = trig_min(positivity_generating_function(BdfOrder(6), 0.0, 1.0));
    const double xi = (20.0 - std::sqrt(94.0)) / 18.0;
    std::ostringstream w;
    w << "k=6 min " << m6.value << " at x=" << m6.x << ", expected x=" << std::acos(xi);
    o.require(m6.value > 0.004785, w.str());
    o.require(std::abs(m6.x - std::acos(xi)) <= 1e-6, w.str());
}

void astability_constants(Outcome& o) {
    std::size_t records = 0;
    for (int k = 3; k <= 6; ++k)
        for (const ExtremumRecord& r : lower_bound_extrema(BdfOrder(k))) {
            ++records;
            std::ostringstream w;
            w << r.name << " value=" << r.value << " bound=" << r.bound;
            o.require(r.passed, w.str());
        }
    o.require(records > 0, "no extremum records");
    const double g0 = composite_angle(BdfOrder(4), 1e-12), gpi = composite_angle(BdfOrder(4), kPi);
    o.require(std::abs(g0 + kPi / 2) <= 1e-9 && std::abs(gpi) <= 1e-9, "BDF4 boundary values");
}

void argument_sweeps(Outcome& o) {
    for (int k = 3; k <= 6; ++k)
        for (int i = 1; i <= 20; ++i)
            for (double st : {0.0, 0.05, 0.5}) {
                const double alpha = 0.05 * i;
                const ArgumentSweep s = argument_sweep(BdfOrder(k), alpha, st, 1.0, 8192);
                std::ostringstream w;
                w << "k=" << k << " alpha=" << alpha << " st=" << st << " max|arg|=" << s.max_abs_arg;
                o.require(s.max_abs_arg <= kPi / 2 + 1e-9, w.str());
            }
}

void toeplitz_sandwich(Outcome& o) {
    for (int k = 3; k <= 6; ++k)
        for (std::size_t N : {10, 50, 200, 400})
            for (double st : {0.0, 0.5}) {
                const ToeplitzCheck t = toeplitz_eigencheck(BdfOrder(k), st, 1.0, N);
                std::ostringstream w;
                w << "k=" << k << " N=" << N << " st=" << st << " lambda=[" << t.lambda_min << ", " << t.lambda_max
                  << "] f=[" << t.f_min << ", " << t.f_max << "]";
                o.require(t.f_min - 1e-10 <= t.lambda_min && t.lambda_max <= t.f_max + 1e-10, w.str());
                if (k == 6) o.require(t.lambda_min > 0.0, w.str());
            }
}

void energy_inequalities(Outcome& o) {
    const std::vector<Rational> ck = {Rational(1, 2), Rational(1, 2), Rational(1, 4), Rational(1, 24)};
    for (int k = 3; k <= 6; ++k) {
        o.require(energy_constant(BdfOrder(k)) == ck[k - 3], "c_k for k=" + std::to_string(k));
        const QuadraticFormCheck e = multiplier_energy_check(BdfOrder(k), 0.0, 1.0, 100, 1000, 1000 + k);
        o.require(e.passed && e.trials == 1000, "multiplier energy k=" + std::to_string(k));
        const CoefficientTable g = bdf_g_coefficients<double>(BdfOrder(k), 0.5, 0.0, 1.0, 100);
        const QuadraticFormCheck q =
            quadrature_positivity_check(q_coefficients(g, multiplier_set(BdfOrder(k)), 100), 100, 1000, 2000 + k);
        o.require(q.passed && q.trials == 1000, "quadrature form k=" + std::to_string(k));
    }
}

void solver_oracle(Outcome& o) {
    const std::vector<std::size_t> N = {128, 256, 512};
    for (int k = 1; k <= 6; ++k)
        for (double sigma : {0.0, 1.0})
            for (double alpha : {0.3, 0.5, 0.8}) {
                const ConvergenceStudy s = convergence_harness(BdfOrder(k), alpha, sigma, 1.0, N, Precision::Quad);
                std::ostringstream w;
                w << "k=" << k << " sigma=" << sigma << " alpha=" << alpha << " corrected orders "
                  << s.order_corrected[0] << ", " << s.order_corrected[1] << " uncorrected " << s.order_uncorrected[0]
                  << ", " << s.order_uncorrected[1];
                o.require(std::abs(s.order_corrected.back() - k) <= 0.35, w.str());
                o.require(s.error_corrected[2] < s.error_corrected[1] && s.error_corrected[1] < s.error_corrected[0],
                          w.str());
                if (k >= 2)
                    for (double u : s.order_uncorrected) o.require(u <= 1.5, w.str());
            }
}

void perturbation_stability(Outcome& o) {
    SubdiffusionProblem<double> p;
    p.A = SpatialOperator<double>::tridiagonal(64);
    p.rho.resize(64);
    for (std::size_t i = 0; i < 64; ++i) p.rho[i] = std::sin(kPi * static_cast<double>(i + 1) / 65.0);
    p.time_op = FractionalOperatorSpec{SingleTerm{0.5}, 0.0};
    for (int k = 3; k <= 6; ++k) {
        const StabilityStudy s = stability_experiment(p, BdfOrder(k), {64, 128, 256, 512}, 10, 3000 + k);
        std::ostringstream w;
        w << "k=" << k << " energy " << s.levels.front().max_energy << " -> " << s.levels.back().max_energy << ", mean "
          << s.levels.front().max_mean << " -> " << s.levels.back().max_mean;
        o.require(s.levels.back().max_energy <= 2.0 * s.levels.front().max_energy, w.str());
        o.require(s.levels.back().max_mean <= 2.0 * s.levels.front().max_mean, w.str());
    }
}

void cli_battery(Outcome& o) {
    const std::string cmd = std::string("\"") + FRACBDF_CLI_PATH + "\" verify-paper > /dev/null";
    const int status = std::system(cmd.c_str());
    o.require(status == 0, "fbdf verify-paper returned status " + std::to_string(status));
}

}  // namespace

int main() {
    int failures = 0;
    failures += run(1, "coefficient oracle equivalence", 1.0, coefficient_oracle);
    failures += run(2, "table exactness", 0.0, table_exactness);
    failures += run(3, "positivity constants", 0.0, positivity_constants);
    failures += run(4, "A-stability constants", 5.0, astability_constants);
    failures += run(5, "argument sweeps", 30.0, argument_sweeps);
    failures += run(6, "Toeplitz eigenvalue sandwich", 0.0, toeplitz_sandwich);
    failures += run(7, "energy inequalities", 10.0, energy_inequalities);
    failures += run(8, "solver convergence orders", 0.0, solver_oracle);
    failures += run(9, "perturbation stability", 60.0, perturbation_stability);
    failures += run(10, "verify-paper exit status", 0.0, cli_battery);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
