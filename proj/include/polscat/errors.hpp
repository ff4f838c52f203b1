#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polscat {

/// Base class for all polscat errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (non-finite values, bad quantum numbers,
/// mismatched bases/wavenumbers, dimension mismatches).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A linear scattering solve hit a non-invertible block. The message names
/// the offending element or block.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

/// The optical-pumping generator has a stationary manifold of dimension > 1.
class DarkStateError : public Error {
public:
    DarkStateError(const std::string& msg, std::vector<std::string> states)
        : Error(msg), states_(std::move(states)) {}
    const std::vector<std::string>& dark_states() const { return states_; }

private:
    std::vector<std::string> states_;
};

/// Fixed-point iteration failed to reach tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& msg, double residual, int iterations)
        : Error(msg), residual_(residual), iterations_(iterations) {}
    double last_residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    double residual_;
    int iterations_;
};

/// System layout outside what the solver supports (e.g. several atoms).
class UnsupportedConfigurationError : public Error {
public:
    using Error::Error;
};

}  // namespace polscat
