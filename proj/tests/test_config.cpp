#include "fracbdf/config.hpp"
#include "fracbdf/errors.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace fracbdf;
using nlohmann::json;

namespace {

json base() {
    return json::parse(R"({
        "time_operator": {"type": "single", "alpha": 0.5},
        "spatial": {"type": "scalar", "lambda": 2.0},
        "initial": {"type": "constant", "value": 1.0}
    })");
}

}  // namespace

TEST_CASE("minimal config") {
    const ExperimentConfig c = parse_config(base());
    CHECK(c.problem.T == 1.0);
    CHECK(c.problem.sigma() == 0.0);
    CHECK(c.problem.rho == std::vector<double>{1.0});
    CHECK_FALSE(c.k.has_value());
    CHECK(c.problem.time_op.kind() == "single");
}

TEST_CASE("full config") {
    json d = base();
    d["spatial"] = {{"type", "tridiagonal"}, {"nx", 20}, {"length", 2.0}};
    d["initial"] = {{"type", "sine"}, {"mode", 2}};
    d["time_operator"] = json::parse(R"({"type": "multi", "terms": [{"b": 1, "alpha": 0.8}, {"b": 0.2, "alpha": 0.4}]})");
    d["sigma"] = 0.5;
    d["k"] = 4;
    d["N"] = 100;
    d["corrected"] = false;
    d["n_list"] = {50, 100};
    const ExperimentConfig c = parse_config(d);
    CHECK(c.problem.A.size() == 20);
    CHECK(c.problem.rho.size() == 20);
    CHECK(c.problem.rho[0] == Catch::Approx(std::sin(2 * 3.141592653589793 / 21)));
    CHECK(*c.k == 4);
    CHECK(*c.N == 100);
    CHECK_FALSE(*c.corrected);
    CHECK(c.n_list.size() == 2);
    CHECK(c.problem.sigma() == 0.5);
}

TEST_CASE("distributed and dirac operators") {
    json d = base();
    d["time_operator"] = json::parse(R"({"type": "distributed", "weight": "power", "scale": 2, "p": 1, "nodes": 8})");
    CHECK(parse_config(d).problem.time_op.orders().size() == 8);
    d["time_operator"] = json::parse(R"({"type": "distributed", "weight": "dirac", "terms": [{"b": 1, "alpha": 0.5}]})");
    CHECK(parse_config(d).problem.time_op.orders().size() == 1);
    d["time_operator"] = json::parse(R"({"type": "distributed", "weight": "constant", "terms": []})");
    CHECK_THROWS_AS(parse_config(d), ParameterError);
}

TEST_CASE("config errors") {
    json d = base();
    d["extra"] = 1;
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    d = base();
    d["spatial"]["lamda"] = 1.0;
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    d = base();
    d["time_operator"]["alpha"] = 1.2;
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    d = base();
    d["k"] = 7;
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    d = base();
    d["N"] = -3;
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    d = base();
    d["k"] = 5;
    d["N"] = 3;
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    d = base();
    d["initial"] = {{"type", "sine"}};
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    d = base();
    d["initial"] = {{"type", "values"}, {"values", {1.0, 2.0}}};
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    d = base();
    d.erase("spatial");
    CHECK_THROWS_AS(parse_config(d), ParameterError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ParameterError);
    try {
        d = base();
        d["spatial"]["lamda"] = 1.0;
        parse_config(d);
    } catch (const ParameterError& e) {
        CHECK(std::string(e.what()).find("lamda") != std::string::npos);
    }
}
