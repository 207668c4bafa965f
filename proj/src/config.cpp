#include "fracbdf/config.hpp"

#include "fracbdf/errors.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <set>

namespace fracbdf {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ParameterError(where + ": expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& item : obj.items())
        if (!ok.count(item.key())) throw ParameterError(where + ": unknown key '" + item.key() + "'");
}

const json& need(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) throw ParameterError(where + ": missing key '" + key + "'");
    return obj.at(key);
}

double number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ParameterError(where + ": expected a number");
    return v.get<double>();
}

std::size_t count(const json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw ParameterError(where + ": expected a nonnegative integer");
    return v.get<std::size_t>();
}

std::string text(const json& v, const std::string& where) {
    if (!v.is_string()) throw ParameterError(where + ": expected a string");
    return v.get<std::string>();
}

std::vector<OrderTerm> order_terms(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParameterError(where + ": expected an array");
    std::vector<OrderTerm> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        only_keys(v[i], at, {"b", "alpha"});
        terms.push_back({number(need(v[i], at, "b"), at + ".b"), number(need(v[i], at, "alpha"), at + ".alpha")});
    }
    return terms;
}

FractionalOperatorSpec time_operator(const json& v) {
    const std::string where = "time_operator";
    if (!v.is_object()) throw ParameterError(where + ": expected an object");
    const std::string type = text(need(v, where, "type"), where + ".type");
    FractionalOperatorSpec spec;
    if (type == "single") {
        only_keys(v, where, {"type", "alpha"});
        spec.variant = SingleTerm{number(need(v, where, "alpha"), where + ".alpha")};
    } else if (type == "multi") {
        only_keys(v, where, {"type", "terms"});
        spec.variant = MultiTerm{order_terms(need(v, where, "terms"), where + ".terms")};
    } else if (type == "distributed") {
        only_keys(v, where, {"type", "weight", "scale", "p", "nodes", "terms"});
        const std::string weight = text(need(v, where, "weight"), where + ".weight");
        if (weight == "dirac") {
            spec.variant = dirac_comb(order_terms(need(v, where, "terms"), where + ".terms"));
        } else {
            if (v.contains("terms")) throw ParameterError(where + ": 'terms' is only valid for the dirac weight");
            const double scale = v.contains("scale") ? number(v["scale"], where + ".scale") : 1.0;
            const double p = v.contains("p") ? number(v["p"], where + ".p") : 0.0;
            const std::size_t nodes = v.contains("nodes") ? count(v["nodes"], where + ".nodes") : 16;
            spec.variant = distributed_order(weight, scale, p, nodes);
        }
    } else {
        throw ParameterError(where + ".type: expected single, multi or distributed, got '" + type + "'");
    }
    return spec;
}

SpatialOperator<double> spatial(const json& v) {
    const std::string where = "spatial";
    if (!v.is_object()) throw ParameterError(where + ": expected an object");
    const std::string type = text(need(v, where, "type"), where + ".type");
    if (type == "scalar") {
        only_keys(v, where, {"type", "lambda"});
        return SpatialOperator<double>::scalar(number(need(v, where, "lambda"), where + ".lambda"));
    }
    if (type == "tridiagonal") {
        only_keys(v, where, {"type", "nx", "length"});
        const double length = v.contains("length") ? number(v["length"], where + ".length") : 1.0;
        return SpatialOperator<double>::tridiagonal(count(need(v, where, "nx"), where + ".nx"), length);
    }
    if (type == "dense") {
        only_keys(v, where, {"type", "matrix"});
        const json& m = need(v, where, "matrix");
        if (!m.is_array() || m.empty()) throw ParameterError(where + ".matrix: expected a nonempty array of rows");
        const std::size_t n = m.size();
        std::vector<double> a;
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i].is_array() || m[i].size() != n) throw ParameterError(where + ".matrix: matrix must be square");
            for (const json& x : m[i]) a.push_back(number(x, where + ".matrix"));
        }
        return SpatialOperator<double>::dense(std::move(a), n);
    }
    throw ParameterError(where + ".type: expected scalar, tridiagonal or dense, got '" + type + "'");
}

std::vector<double> initial(const json& v, const SpatialOperator<double>& A) {
    const std::string where = "initial";
    if (!v.is_object()) throw ParameterError(where + ": expected an object");
    const std::string type = text(need(v, where, "type"), where + ".type");
    const std::size_t n = A.size();
    if (type == "constant") {
        only_keys(v, where, {"type", "value"});
        return std::vector<double>(n, number(need(v, where, "value"), where + ".value"));
    }
    if (type == "sine") {
        only_keys(v, where, {"type", "mode", "amplitude"});
        const double mode = v.contains("mode") ? static_cast<double>(count(v["mode"], where + ".mode")) : 1.0;
        const double amp = v.contains("amplitude") ? number(v["amplitude"], where + ".amplitude") : 1.0;
        if (A.kind() != SpatialOperator<double>::Kind::Tridiagonal)
            throw ParameterError(where + ": the sine datum needs a tridiagonal spatial operator");
        // Grid points x_i = i h on (0, L) with L = (n + 1) h.
        std::vector<double> rho(n);
        for (std::size_t i = 0; i < n; ++i)
            rho[i] = amp * std::sin(mode * std::numbers::pi * static_cast<double>(i + 1) / static_cast<double>(n + 1));
        return rho;
    }
    if (type == "values") {
        only_keys(v, where, {"type", "values"});
        const json& vals = need(v, where, "values");
        if (!vals.is_array()) throw ParameterError(where + ".values: expected an array");
        std::vector<double> rho;
        for (const json& x : vals) rho.push_back(number(x, where + ".values"));
        if (rho.size() != n)
            throw ParameterError(where + ".values: expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(rho.size()));
        return rho;
    }
    throw ParameterError(where + ".type: expected constant, sine or values, got '" + type + "'");
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
    only_keys(doc, "config", {"time_operator", "sigma", "T", "spatial", "initial", "k", "N", "seed", "trials",
                              "corrected", "n_list"});
    ExperimentConfig cfg;
    cfg.problem.time_op = time_operator(need(doc, "config", "time_operator"));
    cfg.problem.time_op.sigma = doc.contains("sigma") ? number(doc["sigma"], "sigma") : 0.0;
    cfg.problem.T = doc.contains("T") ? number(doc["T"], "T") : 1.0;
    cfg.problem.A = spatial(need(doc, "config", "spatial"));
    cfg.problem.rho = initial(need(doc, "config", "initial"), cfg.problem.A);
    if (doc.contains("k")) {
        const std::size_t k = count(doc["k"], "k");
        cfg.k = BdfOrder(static_cast<int>(k)).value();
    }
    if (doc.contains("N")) cfg.N = count(doc["N"], "N");
    if (doc.contains("seed")) cfg.seed = count(doc["seed"], "seed");
    if (doc.contains("trials")) cfg.trials = count(doc["trials"], "trials");
    if (doc.contains("corrected")) {
        if (!doc["corrected"].is_boolean()) throw ParameterError("corrected: expected a boolean");
        cfg.corrected = doc["corrected"].get<bool>();
    }
    if (doc.contains("n_list")) {
        const json& l = doc["n_list"];
        if (!l.is_array() || l.empty()) throw ParameterError("n_list: expected a nonempty array");
        for (const json& x : l) cfg.n_list.push_back(count(x, "n_list"));
    }
    cfg.problem.validate();
    if (cfg.N && cfg.k && *cfg.N < static_cast<std::size_t>(*cfg.k))
        throw ParameterError("N must be at least k");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open config file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ParameterError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

}  // namespace fracbdf
