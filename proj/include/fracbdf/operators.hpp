#pragma once

// Discrete time-fractional operators P(d_tau) for single-term, multi-term and
// distributed-order models, as weighted superpositions of coefficient tables.

#include "fracbdf/coefficients.hpp"
#include "fracbdf/quadrature.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fracbdf {

struct SingleTerm {
    double alpha = 0.5;
};

struct OrderTerm {
    double b = 1.0;
    double alpha = 0.5;
};

/// sum_i b_i d^{alpha_i} with b_i > 0 and 1 > alpha_1 > alpha_2 > ... > 0.
struct MultiTerm {
    std::vector<OrderTerm> terms;
};

/// int_0^1 mu(alpha) d^alpha dalpha, discretized by `rule`.
struct DistributedOrder {
    std::string weight_name;
    std::function<double(double)> weight;
    QuadratureRule rule;
};

/// Named weight functions: "constant" (mu = c), "power" (mu = c alpha^p).
std::function<double(double)> make_weight(const std::string& name, double scale, double p = 0.0);

/// Gauss-Legendre discretization of a named weight function.
DistributedOrder distributed_order(const std::string& name, double scale, double p, std::size_t nodes = 16);

/// Distributed-order spec whose nodes and weights are the Dirac comb sum_i b_i delta(alpha - alpha_i).
DistributedOrder dirac_comb(const std::vector<OrderTerm>& terms);

struct FractionalOperatorSpec {
    std::variant<SingleTerm, MultiTerm, DistributedOrder> variant = SingleTerm{};
    double sigma = 0.0;

    /// Throws ParameterError on any violated constraint.
    void validate() const;

    /// The superposition (coefficient, order) pairs the operator is built from.
    std::vector<OrderTerm> orders() const;

    std::string kind() const;
};

template <class Real>
struct DiscreteTimeOperator {
    struct Term {
        Real coefficient{};  // b_i, or w_q mu(alpha_q)
        Real alpha{};
        Real scale{};        // coefficient * tau^{-alpha}
        BasicCoefficientTable<Real> table;
    };

    BdfOrder k{1};
    Real tau{};
    Real sigma{};
    std::vector<Term> terms;
    std::vector<Real> weights;  // weights[j] = sum_i scale_i g_j^{(i)}

    Real zero_weight() const { return weights.front(); }

    /// sum_{j=1}^{n} weights[j] w^{n-j} for history = w^0..w^{n-1} (n rows of length dim).
    std::vector<Real> apply_history(std::span<const Real> history, std::size_t n, std::size_t dim) const;

    /// The same sum restricted to one term (superposition checks).
    std::vector<Real> apply_history_term(std::size_t term, std::span<const Real> history, std::size_t n,
                                         std::size_t dim) const;
};

/// Tables up to index N for every term of `spec`.
template <class Real>
DiscreteTimeOperator<Real> discretize(const FractionalOperatorSpec& spec, BdfOrder k, Real tau, std::size_t N);

}  // namespace fracbdf
