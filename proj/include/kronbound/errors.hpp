#pragma once

#include <stdexcept>
#include <string>

namespace kronbound {

// Malformed or inconsistent arguments (size mismatch, bad syntax, infeasible margins).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured enumeration cap was hit before the computation finished.
class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal identity failed to hold; always indicates a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Iterative solver stopped without meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}

    double best_residual() const noexcept { return best_residual_; }

private:
    double best_residual_;
};

}  // namespace kronbound
