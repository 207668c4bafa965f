#include "fracbdf/errors.hpp"
#include "fracbdf/mittag_leffler.hpp"
#include "fracbdf/real.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

using namespace fracbdf;
using Catch::Approx;

TEST_CASE("special values") {
    CHECK(mittag_leffler(1.0, -2.0) == Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(mittag_leffler(0.3, 0.0) == 1.0);
    // E_{1/2}(-x) = exp(x^2) erfc(x)
    for (double x : {0.1, 1.0, 3.0, 8.0, 20.0}) {
        const double ref = std::exp(x * x) * std::erfc(x);
        CHECK(mittag_leffler(0.5, -x) == Approx(ref).epsilon(1e-12));
    }
    CHECK(mittag_leffler(0.5, -1.0) == Approx(0.4275835761558070).epsilon(1e-14));
}

TEST_CASE("series and integral agree where both apply") {
    std::size_t compared = 0;
    for (double alpha : {0.2, 0.5, 0.7, 0.95})
        for (double x : {0.5, 1.0, 2.0, 3.0, 5.0}) {
            const SeriesValue<double> s = mittag_leffler_series(alpha, -x);
            if (!(s.abs_sum <= 1e3 * std::min(std::abs(s.value), 1.0))) continue;
            const double i = mittag_leffler_integral(alpha, x);
            CHECK(std::abs(s.value - i) <= 1e-10 * std::abs(s.value));
            ++compared;
        }
    CHECK(compared >= 10);
}

TEST_CASE("completely monotone on the negative axis") {
    for (double alpha : {0.3, 0.8}) {
        double prev = 1.0;
        for (double x = 0.25; x <= 50.0; x *= 1.5) {
            const double e = mittag_leffler(alpha, -x);
            CHECK(e > 0.0);
            CHECK(e < prev);
            prev = e;
        }
    }
}

TEST_CASE("quad precision") {
    const Quad x = 2;
    const Quad e = mittag_leffler<Quad>(Quad(0.5), -x);
    const Quad ref = Quad("0.2553956763105057438650885809085427633");
    CHECK(static_cast<double>(boost::multiprecision::abs(e - ref)) < 1e-30);
}

TEST_CASE("exact scalar solution") {
    CHECK(exact_scalar_solution(1.0, 1.0, 1.0, 1.0, 0.7) == Approx(std::exp(-1.4)).epsilon(1e-15));
    CHECK(exact_scalar_solution(1.0, 0.5, 0.0, 2.0, 1.0) == Approx(2.0 * std::exp(1.0) * std::erfc(1.0)));
    CHECK_THROWS_AS(mittag_leffler(0.5, 1.0), ParameterError);
    CHECK_THROWS_AS(mittag_leffler(1.5, -1.0), ParameterError);
    CHECK_THROWS_AS(mittag_leffler(0.0, -1.0), ParameterError);
}
