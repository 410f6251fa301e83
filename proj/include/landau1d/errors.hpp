#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace landau1d {

class Error : public std::runtime_error {
public:
    explicit Error(std::string const& what) : std::runtime_error(what) {}
    virtual char const* kind() const noexcept { return "error"; }
};

class InvalidInput : public Error {
public:
    using Error::Error;
    char const* kind() const noexcept override { return "invalid_input"; }
};

// Tolerance not reached; carries the last estimate and its error bound.
class AccuracyError : public Error {
public:
    AccuracyError(std::string const& what, double best, double bound)
        : Error(what), best_estimate(best), error_bound(bound) {}
    char const* kind() const noexcept override { return "accuracy"; }
    double best_estimate;
    double error_bound;
};

class NonConvergence : public Error {
public:
    NonConvergence(std::string const& what, std::vector<double> history)
        : Error(what), residual_history(std::move(history)) {}
    char const* kind() const noexcept override { return "non_convergence"; }
    std::vector<double> residual_history;
};

class DomainTooSmall : public Error {
public:
    DomainTooSmall(std::string const& what, double suggested)
        : Error(what), suggested_half_extent(suggested) {}
    char const* kind() const noexcept override { return "domain_too_small"; }
    double suggested_half_extent;
};

class SizeError : public Error {
public:
    using Error::Error;
    char const* kind() const noexcept override { return "size"; }
};

class NearSingular : public Error {
public:
    using Error::Error;
    char const* kind() const noexcept override { return "near_singular"; }
};

class EnvelopeError : public Error {
public:
    EnvelopeError(std::string const& what, double x, double violation)
        : Error(what), worst_x(x), worst_violation(violation) {}
    char const* kind() const noexcept override { return "envelope"; }
    double worst_x;
    double worst_violation;
};

class SamplingError : public Error {
public:
    using Error::Error;
    char const* kind() const noexcept override { return "sampling"; }
};

} // namespace landau1d
