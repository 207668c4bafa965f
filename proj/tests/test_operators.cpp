#include "fracbdf/errors.hpp"
#include "fracbdf/operators.hpp"
#include "fracbdf/quadrature.hpp"
#include "fracbdf/real.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace fracbdf;
using Catch::Approx;

TEST_CASE("Gauss-Legendre rule on (0, 1)") {
    const QuadratureRule r = gauss_legendre_unit(16);
    REQUIRE(r.size() == 16);
    double s = 0.0, m3 = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        s += r.weights[i];
        m3 += r.weights[i] * std::pow(r.nodes[i], 31);
        CHECK(r.nodes[i] > 0.0);
        CHECK(r.nodes[i] < 1.0);
    }
    CHECK(s == Approx(1.0).epsilon(1e-15));
    CHECK(m3 == Approx(1.0 / 32.0).epsilon(1e-13));
}

TEST_CASE("operator spec validation") {
    FractionalOperatorSpec s;
    s.variant = SingleTerm{0.5};
    CHECK_NOTHROW(s.validate());
    CHECK(s.kind() == "single");
    s.variant = SingleTerm{1.5};
    CHECK_THROWS_AS(s.validate(), ParameterError);
    s.variant = MultiTerm{{{1.0, 0.7}, {0.5, 0.3}}};
    CHECK_NOTHROW(s.validate());
    CHECK(s.kind() == "multi");
    s.variant = MultiTerm{{{1.0, 0.3}, {0.5, 0.7}}};
    CHECK_THROWS_AS(s.validate(), ParameterError);
    s.variant = MultiTerm{{{-1.0, 0.7}}};
    CHECK_THROWS_AS(s.validate(), ParameterError);
    s.variant = MultiTerm{};
    CHECK_THROWS_AS(s.validate(), ParameterError);
    s.variant = distributed_order("constant", 1.0, 0.0, 8);
    CHECK_NOTHROW(s.validate());
    CHECK(s.kind() == "distributed");
    s.variant = SingleTerm{0.5};
    s.sigma = -1.0;
    CHECK_THROWS_AS(s.validate(), ParameterError);
    CHECK_THROWS_AS(make_weight("gaussian", 1.0), ParameterError);
    CHECK_THROWS_AS(make_weight("constant", -1.0), ParameterError);
}

TEST_CASE("single-term weights are scaled coefficient tables") {
    FractionalOperatorSpec s{SingleTerm{0.4}, 0.3};
    const double tau = 0.01;
    const auto op = discretize<double>(s, BdfOrder(4), tau, 64);
    const CoefficientTable g = bdf_g_coefficients(BdfOrder(4), FracParams{0.4, 0.3, tau}, 64);
    REQUIRE(op.weights.size() == 65);
    for (std::size_t j = 0; j <= 64; ++j) CHECK(op.weights[j] == Approx(std::pow(tau, -0.4) * g.g[j]).epsilon(1e-14));
    CHECK(op.zero_weight() == op.weights[0]);
}

TEST_CASE("Dirac comb reproduces the multi-term operator") {
    const std::vector<OrderTerm> terms{{2.0, 0.8}, {0.5, 0.4}, {1.0, 0.1}};
    FractionalOperatorSpec multi{MultiTerm{terms}, 0.2};
    FractionalOperatorSpec comb{dirac_comb(terms), 0.2};
    const auto a = discretize<double>(multi, BdfOrder(5), 0.02, 50);
    const auto b = discretize<double>(comb, BdfOrder(5), 0.02, 50);
    for (std::size_t j = 0; j <= 50; ++j) CHECK(a.weights[j] == Approx(b.weights[j]).epsilon(1e-14));
}

TEST_CASE("history sum is the superposition of the term contributions") {
    FractionalOperatorSpec s{MultiTerm{{{1.0, 0.9}, {0.3, 0.5}, {0.2, 0.2}}}, 0.0};
    const std::size_t n = 20, dim = 3;
    const auto op = discretize<double>(s, BdfOrder(3), 0.05, n);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> normal;
    std::vector<double> hist(n * dim);
    for (double& x : hist) x = normal(rng);
    const auto total = op.apply_history(hist, n, dim);
    std::vector<double> sum(dim, 0.0);
    for (std::size_t t = 0; t < op.terms.size(); ++t) {
        const auto part = op.apply_history_term(t, hist, n, dim);
        for (std::size_t d = 0; d < dim; ++d) sum[d] += part[d];
    }
    for (std::size_t d = 0; d < dim; ++d) CHECK(total[d] == Approx(sum[d]).epsilon(1e-13));
}

TEST_CASE("distributed order with constant weight") {
    FractionalOperatorSpec s{distributed_order("constant", 2.0, 0.0, 16), 0.0};
    const auto orders = s.orders();
    REQUIRE(orders.size() == 16);
    double total = 0.0;
    for (const auto& o : orders) total += o.b;
    CHECK(total == Approx(2.0).epsilon(1e-14));
    const auto op = discretize<double>(s, BdfOrder(2), 0.1, 10);
    CHECK(op.terms.size() == 16);
    CHECK(op.zero_weight() > 0.0);
}

TEST_CASE("discretize works in quad precision") {
    FractionalOperatorSpec s{SingleTerm{0.5}, 0.0};
    const auto q = discretize<Quad>(s, BdfOrder(6), Quad(1) / 64, 64);
    const auto d = discretize<double>(s, BdfOrder(6), 1.0 / 64, 64);
    for (std::size_t j = 0; j <= 64; ++j)
        CHECK(static_cast<double>(q.weights[j]) == Approx(d.weights[j]).epsilon(1e-12).margin(1e-14));
}
