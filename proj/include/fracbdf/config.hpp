#pragma once

// JSON experiment configuration. The schema is documented in docs/config.md;
// every object rejects keys it does not know.

#include "fracbdf/solver.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fracbdf {

struct ExperimentConfig {
    SubdiffusionProblem<double> problem;
    std::optional<int> k;
    std::optional<std::size_t> N;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<bool> corrected;
    std::vector<std::size_t> n_list;
};

/// Validates every domain constraint; throws ParameterError naming the offending key.
ExperimentConfig parse_config(const nlohmann::json& doc);

ExperimentConfig load_config(const std::string& path);

}  // namespace fracbdf
