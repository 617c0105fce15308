#pragma once

#include <stdexcept>
#include <string>

namespace basel {

/// Argument outside the domain of an operation (odd zeta argument, |x| >= pi
/// for the compact kernel, inverted intervals, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure could not meet its tolerance. Carries the best value
/// and error estimate reached before giving up.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double best_value, double best_error)
        : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}

    double best_value() const noexcept { return best_value_; }
    double best_error() const noexcept { return best_error_; }

private:
    double best_value_;
    double best_error_;
};

} // namespace basel
