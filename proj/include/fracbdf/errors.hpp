#pragma once

#include <stdexcept>
#include <string>

namespace fracbdf {

/// A parameter lies outside the domain an operation accepts.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two computations that must agree did not. Carries the check name and the
/// numbers involved so callers can emit a machine-readable failure record.
class ConsistencyError : public std::runtime_error {
public:
    ConsistencyError(std::string check, double computed, double expected, double tolerance,
                     const std::string& what)
        : std::runtime_error(what),
          check_(std::move(check)),
          computed_(computed),
          expected_(expected),
          tolerance_(tolerance) {}

    const std::string& check() const noexcept { return check_; }
    double computed() const noexcept { return computed_; }
    double expected() const noexcept { return expected_; }
    double tolerance() const noexcept { return tolerance_; }

private:
    std::string check_;
    double computed_;
    double expected_;
    double tolerance_;
};

/// Adjacent samples of an argument sweep differ by more than the grid can resolve.
class GridTooCoarse : public std::runtime_error {
public:
    explicit GridTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fracbdf
