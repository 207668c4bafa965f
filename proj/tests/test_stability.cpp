#include "fracbdf/errors.hpp"
#include "fracbdf/polynomial.hpp"
#include "fracbdf/stability.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace fracbdf;
using Catch::Approx;

constexpr double kPi = std::numbers::pi;

TEST_CASE("generating functions of the symmetrized multiplier matrix") {
    const TrigPolynomial f3 = positivity_generating_function(BdfOrder(3), 0.0, 1.0);
    const TrigPolynomial f5 = positivity_generating_function(BdfOrder(5), 0.0, 1.0);
    for (double x = 0.0; x <= kPi; x += 0.01) {
        CHECK(f3(x) == Approx(0.5 * (1.0 - std::cos(x))).margin(1e-15));
        CHECK(f5(x) == Approx(0.75 - std::cos(x) + 0.25 * std::cos(2 * x)).margin(1e-15));
        CHECK(f3(x) == Approx(f3(-x)));
    }
    CHECK_THROWS_AS(positivity_generating_function(BdfOrder(2), 0.0, 1.0), ParameterError);
    CHECK(energy_constant(BdfOrder(6)) == Rational(1, 24));
    CHECK(energy_constant(BdfOrder(5)) == Rational(1, 4));
}

TEST_CASE("trig_min") {
    const Extremum m = trig_min(TrigPolynomial{{0.5, -0.5}});
    CHECK(m.x == Approx(0.0).margin(1e-6));
    CHECK(m.value == Approx(0.0).margin(1e-15));
    CHECK(trig_min(TrigPolynomial{{2.5}}).value == 2.5);
    const Extremum m6 = trig_min(positivity_generating_function(BdfOrder(6), 0.0, 1.0));
    CHECK(m6.value > 0.004785);
    CHECK(m6.value < 0.0055);
}

TEST_CASE("Toeplitz band and sandwich") {
    const ToeplitzBand b(BdfOrder(3), 0.0, 1.0, 2);
    const auto h = b.symmetric_part();
    CHECK(h == std::vector<double>{0.5, -0.25, -0.25, 0.5});
    const ToeplitzCheck t2 = toeplitz_eigencheck(BdfOrder(3), 0.0, 1.0, 2);
    CHECK(t2.lambda_min == Approx(0.25));
    CHECK(t2.lambda_max == Approx(0.75));
    CHECK(b.entry(1, 0) == -0.5);
    CHECK(b.entry(0, 1) == 0.0);
    for (std::size_t N : {10, 100}) CHECK(toeplitz_eigencheck(BdfOrder(3), 0.0, 1.0, N).lambda_min >= -1e-12);
    const ToeplitzCheck t6 = toeplitz_eigencheck(BdfOrder(6), 0.0, 1.0, 200);
    CHECK(t6.positive_definite);
    CHECK(t6.lambda_min >= t6.f_min - 1e-10);
    CHECK_THROWS_AS(ToeplitzBand(BdfOrder(6), 0.0, 1.0, 3), ParameterError);
}

TEST_CASE("energy inequalities by direct evaluation") {
    const std::vector<double> zero(50, 0.0);
    CHECK(multiplier_energy_slack(BdfOrder(6), 0.0, 1.0, zero, 50, 1) == 0.0);
    CHECK(multiplier_energy_check(BdfOrder(6), 0.0, 1.0, 50, 1000, 7).passed);
    CHECK(multiplier_energy_check(BdfOrder(5), 0.5, 0.1, 50, 200, 8).passed);
    CHECK(multiplier_energy_check(BdfOrder(4), 0.0, 1.0, 30, 100, 9, 3).passed);

    const CoefficientTable g = bdf_g_coefficients(BdfOrder(6), FracParams{0.5, 0.0, 1.0}, 100);
    const QTable q = q_coefficients(g, multiplier_set(BdfOrder(6)), 100);
    CHECK(quadrature_positivity_check(q, 100, 1000, 11).passed);
    const std::vector<double> v1{2.0};
    CHECK(quadrature_quadratic_form(q, v1, 1, 1) == Approx(4.0 * q.q[0]));
    CHECK(quadrature_quadratic_form(q, std::vector<double>(100, 0.0), 100, 1) == 0.0);
}

TEST_CASE("residual polynomials factor the BDF polynomial") {
    for (int k = 1; k <= 6; ++k) {
        const auto r = residual_polynomial(BdfOrder(k));
        const auto p = bdf_polynomial(BdfOrder(k));
        // (1 - z) R(z)
        std::vector<double> prod(r.size() + 1, 0.0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            prod[i] += r[i];
            prod[i + 1] -= r[i];
        }
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(prod[i] == Approx(p[i]).margin(1e-14));
    }
}

TEST_CASE("argument sweep") {
    const ArgumentSweep s = argument_sweep(BdfOrder(3), 0.5, 0.0, 1.0, 4096);
    CHECK(s.limit_at_zero == Approx(-kPi / 4));
    CHECK(s.arg.front() == Approx(-kPi / 4).margin(1e-3));
    CHECK(s.arg.back() == Approx(0.0).margin(1e-14));
    CHECK(s.x.back() == Approx(kPi));
    for (std::size_t i = 1; i < s.x.size(); ++i) CHECK(s.x[i] > s.x[i - 1]);
    for (int k = 3; k <= 6; ++k)
        for (double alpha : {0.1, 0.5, 1.0})
            for (double st : {0.0, 0.05, 0.5}) {
                const ArgumentSweep w = argument_sweep(BdfOrder(k), alpha, st, 1.0, 8192);
                CHECK(w.max_abs_arg <= kPi / 2 + 1e-9);
            }
    CHECK_THROWS_AS(argument_sweep(BdfOrder(2), 0.5, 0.0, 1.0, 1024), ParameterError);
}

TEST_CASE("BDF6 theta_2 follows the two-case branch") {
    const ThetaPoint p = theta_components(BdfOrder(6), 0.0, 1.0, 1.7103);
    CHECK(p.a < 0.0);
    CHECK(std::abs(p.theta[1]) <= kPi);
    CHECK(p.count == 5);
    CHECK(theta_components(BdfOrder(5), 0.0, 1.0, 1.0).count == 3);
}

TEST_CASE("printed proof constants") {
    for (int k = 3; k <= 6; ++k)
        for (const ExtremumRecord& r : lower_bound_extrema(BdfOrder(k))) {
            INFO(r.name << " value=" << r.value << " bound=" << r.bound << " margin=" << r.margin);
            CHECK(r.passed);
        }
    const double y = (131.0 - std::sqrt(1981.0)) / 132.0;
    CHECK(polyval(derivative_numerator(BdfOrder(3)), y) > 2.02);
    CHECK(composite_angle(BdfOrder(4), 0.0) == Approx(-kPi / 2));
    CHECK(composite_angle(BdfOrder(4), kPi) == Approx(0.0).margin(1e-12));
}

TEST_CASE("root finding") {
    const auto roots = real_roots_in({-6.0, 11.0, -6.0, 1.0}, -10.0, 10.0);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Approx(1.0));
    CHECK(roots[1] == Approx(2.0));
    CHECK(roots[2] == Approx(3.0));
    CHECK(real_roots_in({1.0, 0.0, 1.0}, -10.0, 10.0).empty());
}
