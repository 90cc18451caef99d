#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace burgersfem {

// Config file / parameter validation failure. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Direct factorization failed (structurally or numerically singular matrix).
struct SingularJacobian : std::runtime_error {
    explicit SingularJacobian(const std::string& what) : std::runtime_error(what) {}
};

// Newton iteration exhausted its budget. Carries the residual history of the
// failing solve and the time step index where it happened.
struct NonConvergence : std::runtime_error {
    NonConvergence(int step_index, std::vector<double> history, const std::string& what)
        : std::runtime_error(what), step(step_index), residual_history(std::move(history)) {}
    int step;
    std::vector<double> residual_history;
};

// Decay-rate fit was asked to take a logarithm of a non-positive norm sample.
struct NonPositiveNorm : std::runtime_error {
    explicit NonPositiveNorm(const std::string& what) : std::runtime_error(what) {}
};

// Observed-order computation received a non-positive error value.
struct NonPositiveError : std::runtime_error {
    explicit NonPositiveError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace burgersfem
