#include "fracbdf/coefficients.hpp"
#include "fracbdf/errors.hpp"
#include "fracbdf/real.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace fracbdf;
using Catch::Approx;

TEST_CASE("BdfOrder accepts 1..6 only") {
    for (int k = 1; k <= 6; ++k) CHECK(BdfOrder(k).value() == k);
    CHECK_THROWS_AS(BdfOrder(0), ParameterError);
    CHECK_THROWS_AS(BdfOrder(7), ParameterError);
}

TEST_CASE("parameter domain") {
    CHECK_THROWS_AS((FracParams{0.0, 0.0, 1.0}.validate()), ParameterError);
    CHECK_THROWS_AS((FracParams{1.2, 0.0, 1.0}.validate()), ParameterError);
    CHECK_THROWS_AS((FracParams{0.5, -1.0, 1.0}.validate()), ParameterError);
    CHECK_THROWS_AS((FracParams{0.5, 0.0, 0.0}.validate()), ParameterError);
    CHECK_NOTHROW((FracParams{1.0, 0.0, 1.0}.validate()));
    CHECK_THROWS_AS(bdf_l_coefficients<double>(BdfOrder(3), 0.0, 8), ParameterError);
}

TEST_CASE("classical polynomials at alpha = 1") {
    const auto l1 = bdf_l_coefficients<double>(BdfOrder(1), 1.0, 4);
    CHECK(l1 == std::vector<double>{1, -1, 0, 0, 0});
    const auto l2 = bdf_l_coefficients<double>(BdfOrder(2), 1.0, 4);
    CHECK(l2[0] == Approx(1.5));
    CHECK(l2[1] == Approx(-2.0));
    CHECK(l2[2] == Approx(0.5));
    CHECK(std::abs(l2[3]) < 1e-15);
    CHECK(std::abs(l2[4]) < 1e-15);
    for (int k = 1; k <= 6; ++k) {
        const auto l = bdf_l_coefficients<double>(BdfOrder(k), 1.0, 64);
        const auto p = bdf_polynomial(BdfOrder(k));
        for (int j = 0; j <= k; ++j) CHECK(l[j] == Approx(p[j]).margin(1e-13));
        for (std::size_t j = k + 1; j < l.size(); ++j) CHECK(std::abs(l[j]) < 1e-12);
    }
}

TEST_CASE("BDF3 closed-form starting values") {
    const auto l = bdf_l_coefficients<double>(BdfOrder(3), 0.5, 1);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == Approx(std::sqrt(11.0 / 6.0)).epsilon(1e-15));
    CHECK(l[1] == Approx(-std::sqrt(11.0 / 6.0) * (18.0 / 11.0) * 0.5).epsilon(1e-15));
}

TEST_CASE("series oracle examples") {
    const auto o = series_oracle(BdfOrder(1), 0.5, 2);
    CHECK(o[0] == Approx(1.0));
    CHECK(o[1] == Approx(-0.5));
    CHECK(o[2] == Approx(-0.125));
    const auto o2 = series_oracle(BdfOrder(2), 1.0, 2);
    CHECK(o2[0] == Approx(1.5));
    CHECK(o2[1] == Approx(-2.0));
    CHECK(o2[2] == Approx(0.5));
}

TEST_CASE("recurrence matches the series oracle") {
    for (int k = 1; k <= 6; ++k)
        for (double alpha : {0.1, 0.25, 0.3, 0.5, 0.7, 0.75, 0.9, 1.0}) {
            const auto l = bdf_l_coefficients<double>(BdfOrder(k), alpha, 512);
            const auto o = series_oracle(BdfOrder(k), alpha, 512);
            double worst = 0.0;
            for (std::size_t j = 0; j < l.size(); ++j)
                worst = std::max(worst, std::abs(l[j] - o[j]) / std::max(1.0, std::abs(l[j])));
            INFO("k=" << k << " alpha=" << alpha);
            CHECK(worst <= 1e-12);
        }
}

TEST_CASE("quad-precision tables agree with double") {
    for (int k = 1; k <= 6; ++k) {
        const auto ld = bdf_l_coefficients<double>(BdfOrder(k), 0.3, 256);
        const auto lq = bdf_l_coefficients<Quad>(BdfOrder(k), Quad(0.3), 256);
        for (std::size_t j = 0; j < ld.size(); ++j)
            CHECK(std::abs(ld[j] - static_cast<double>(lq[j])) <= 1e-13 * std::max(1.0, std::abs(ld[j])));
    }
}

TEST_CASE("l_0 and the sign structure of BDF1") {
    for (int k = 1; k <= 6; ++k) {
        double base = 0.0;
        for (int j = 1; j <= k; ++j) base += 1.0 / j;
        CHECK(bdf_l_coefficients<double>(BdfOrder(k), 0.4, 4)[0] == Approx(std::pow(base, 0.4)));
    }
    const auto l = bdf_l_coefficients<double>(BdfOrder(1), 0.6, 200);
    for (std::size_t j = 1; j + 1 < l.size(); ++j) {
        CHECK(l[j] < 0.0);  // (1 - zeta)^alpha: every coefficient after l_0 is negative
        CHECK(std::abs(l[j + 1]) < std::abs(l[j]));
    }
}

TEST_CASE("partial sums decay toward g(1) = 0") {
    for (int k = 1; k <= 6; ++k) {
        const auto l = bdf_l_coefficients<double>(BdfOrder(k), 0.5, 512);
        double sum = 0.0;
        std::vector<double> partial;
        for (double x : l) {
            sum += x;
            partial.push_back(std::abs(sum));
        }
        for (std::size_t J = 502; J <= 512; ++J) CHECK(partial[J] < partial[J - 1]);
    }
}

TEST_CASE("damped weights") {
    const auto t0 = bdf_g_coefficients(BdfOrder(4), FracParams{0.5, 0.0, 0.1}, 32);
    CHECK(t0.g == t0.l);
    const auto t = bdf_g_coefficients(BdfOrder(4), FracParams{0.5, 1.0, 0.1}, 32);
    CHECK(t.g[1] == Approx(std::exp(-0.1) * t.l[1]).epsilon(1e-15));
    CHECK(t.g[0] == t.l[0]);
    for (std::size_t j = 1; j < t.g.size(); ++j) CHECK(std::abs(t.g[j]) < std::abs(t.l[j]));
    const auto c = bdf_g_coefficients(BdfOrder(2), FracParams{1.0, 0.0, 1.0}, 4);
    CHECK(c.g[0] == Approx(1.5));
    CHECK(c.g[1] == Approx(-2.0));
    CHECK(c.g[2] == Approx(0.5));
    CHECK(c.max_index() == 4);
}
