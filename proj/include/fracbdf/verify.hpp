#pragma once

// The verification battery behind `fbdf verify-paper`: coefficient oracles,
// exact tables, proof constants, Toeplitz sandwich, argument sweeps, energy
// inequalities, scalar convergence and perturbation stability.

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fracbdf {

struct CheckResult {
    std::string name;
    bool passed = false;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    std::vector<CheckResult> checks;

    /// First failing check, or nullptr.
    const CheckResult* first_failure() const;
};

struct VerifyOptions {
    std::uint64_t seed = 20240611;
};

inline constexpr int kCriterionCount = 9;

/// Runs criterion `id` (1..9).
CriterionResult verify_criterion(int id, const VerifyOptions& options = {});

std::vector<CriterionResult> verify_paper(const VerifyOptions& options = {});

nlohmann::json to_json(const CheckResult& check);
nlohmann::json to_json(const CriterionResult& criterion, bool include_checks = false);

}  // namespace fracbdf
