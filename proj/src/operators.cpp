#include "fracbdf/operators.hpp"

#include "fracbdf/errors.hpp"
#include "fracbdf/real.hpp"

#include <cmath>
#include <sstream>

namespace fracbdf {

std::function<double(double)> make_weight(const std::string& name, double scale, double p) {
    if (!(scale >= 0.0)) throw ParameterError("weight scale must be nonnegative");
    if (name == "constant") return [scale](double) { return scale; };
    if (name == "power") {
        if (!(p >= 0.0)) throw ParameterError("power weight needs p >= 0");
        return [scale, p](double a) { return scale * std::pow(a, p); };
    }
    throw ParameterError("unknown weight function '" + name + "' (expected constant, power or dirac)");
}

DistributedOrder distributed_order(const std::string& name, double scale, double p, std::size_t nodes) {
    DistributedOrder d;
    d.weight_name = name;
    d.weight = make_weight(name, scale, p);
    d.rule = gauss_legendre_unit(nodes);
    return d;
}

DistributedOrder dirac_comb(const std::vector<OrderTerm>& terms) {
    DistributedOrder d;
    d.weight_name = "dirac";
    d.weight = [](double) { return 1.0; };
    for (const OrderTerm& t : terms) {
        d.rule.nodes.push_back(t.alpha);
        d.rule.weights.push_back(t.b);
    }
    return d;
}

namespace {

void check_open_order(double alpha, const char* where) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        std::ostringstream os;
        os << where << ": order alpha must lie in (0, 1), got " << alpha;
        throw ParameterError(os.str());
    }
}

}  // namespace

void FractionalOperatorSpec::validate() const {
    if (!(sigma >= 0.0)) throw ParameterError("sigma must be >= 0");
    if (const auto* s = std::get_if<SingleTerm>(&variant)) {
        validate_alpha(s->alpha);
    } else if (const auto* m = std::get_if<MultiTerm>(&variant)) {
        if (m->terms.empty()) throw ParameterError("multi-term operator needs at least one term");
        for (std::size_t i = 0; i < m->terms.size(); ++i) {
            const OrderTerm& t = m->terms[i];
            check_open_order(t.alpha, "multi-term");
            if (!(t.b > 0.0)) throw ParameterError("multi-term coefficients b_i must be positive");
            if (i > 0 && !(t.alpha < m->terms[i - 1].alpha))
                throw ParameterError("multi-term orders must be strictly decreasing");
        }
    } else {
        const auto& d = std::get<DistributedOrder>(variant);
        if (d.rule.size() == 0) throw ParameterError("distributed-order quadrature has no nodes");
        if (d.rule.nodes.size() != d.rule.weights.size())
            throw ParameterError("distributed-order quadrature: nodes and weights differ in length");
        if (!d.weight) throw ParameterError("distributed-order weight function missing");
        double total = 0.0;
        for (std::size_t q = 0; q < d.rule.size(); ++q) {
            check_open_order(d.rule.nodes[q], "distributed-order node");
            const double w = d.rule.weights[q] * d.weight(d.rule.nodes[q]);
            if (!(w >= 0.0)) throw ParameterError("distributed-order weight must be nonnegative on the nodes");
            total += w;
        }
        if (!(total > 0.0)) throw ParameterError("distributed-order weight vanishes on every node");
    }
}

std::vector<OrderTerm> FractionalOperatorSpec::orders() const {
    if (const auto* s = std::get_if<SingleTerm>(&variant)) return {{1.0, s->alpha}};
    if (const auto* m = std::get_if<MultiTerm>(&variant)) return m->terms;
    const auto& d = std::get<DistributedOrder>(variant);
    std::vector<OrderTerm> out;
    for (std::size_t q = 0; q < d.rule.size(); ++q)
        out.push_back({d.rule.weights[q] * d.weight(d.rule.nodes[q]), d.rule.nodes[q]});
    return out;
}

std::string FractionalOperatorSpec::kind() const {
    if (std::holds_alternative<SingleTerm>(variant)) return "single";
    if (std::holds_alternative<MultiTerm>(variant)) return "multi";
    return "distributed";
}

template <class Real>
std::vector<Real> DiscreteTimeOperator<Real>::apply_history(std::span<const Real> history, std::size_t n,
                                                            std::size_t dim) const {
    if (history.size() != n * dim) throw ParameterError("apply_history: history length mismatch");
    if (weights.size() <= n) throw ParameterError("apply_history: operator tables too short for this step");
    std::vector<Real> out(dim, Real(0));
    for (std::size_t j = 1; j <= n; ++j) {
        const Real wj = weights[j];
        const Real* row = history.data() + (n - j) * dim;
        for (std::size_t d = 0; d < dim; ++d) out[d] += wj * row[d];
    }
    return out;
}

template <class Real>
std::vector<Real> DiscreteTimeOperator<Real>::apply_history_term(std::size_t term, std::span<const Real> history,
                                                                 std::size_t n, std::size_t dim) const {
    if (term >= terms.size()) throw ParameterError("apply_history_term: no such term");
    if (history.size() != n * dim) throw ParameterError("apply_history_term: history length mismatch");
    const Term& t = terms[term];
    if (t.table.g.size() <= n) throw ParameterError("apply_history_term: table too short for this step");
    std::vector<Real> out(dim, Real(0));
    for (std::size_t j = 1; j <= n; ++j) {
        const Real wj = t.scale * t.table.g[j];
        const Real* row = history.data() + (n - j) * dim;
        for (std::size_t d = 0; d < dim; ++d) out[d] += wj * row[d];
    }
    return out;
}

template <class Real>
DiscreteTimeOperator<Real> discretize(const FractionalOperatorSpec& spec, BdfOrder k, Real tau, std::size_t N) {
    using std::pow;
    spec.validate();
    if (!(tau > Real(0))) throw ParameterError("discretize: tau must be positive");
    if (N < 1) throw ParameterError("discretize: N must be at least 1");

    DiscreteTimeOperator<Real> op;
    op.k = k;
    op.tau = tau;
    op.sigma = Real(spec.sigma);
    op.weights.assign(N + 1, Real(0));
    for (const OrderTerm& o : spec.orders()) {
        if (o.b == 0.0) continue;
        typename DiscreteTimeOperator<Real>::Term t;
        t.coefficient = Real(o.b);
        t.alpha = Real(o.alpha);
        t.scale = t.coefficient * pow(tau, -t.alpha);
        t.table = bdf_g_coefficients<Real>(k, t.alpha, op.sigma, tau, N);
        for (std::size_t j = 0; j <= N; ++j) op.weights[j] += t.scale * t.table.g[j];
        op.terms.push_back(std::move(t));
    }
    if (!(op.zero_weight() > Real(0))) throw ParameterError("discretize: zero weight must be positive");
    return op;
}

template struct DiscreteTimeOperator<double>;
template struct DiscreteTimeOperator<Quad>;
template DiscreteTimeOperator<double> discretize<double>(const FractionalOperatorSpec&, BdfOrder, double,
                                                         std::size_t);
template DiscreteTimeOperator<Quad> discretize<Quad>(const FractionalOperatorSpec&, BdfOrder, Quad, std::size_t);

}  // namespace fracbdf
