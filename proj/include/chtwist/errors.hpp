#pragma once

#include <stdexcept>
#include <string>

namespace chtwist {

/// Input outside the domain of an operation: |z| >= 1, v = 0, bad parameters.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A dense solve against a (numerically) singular 2-form.
class ConditioningError : public std::runtime_error {
public:
    ConditioningError(const std::string& what, double rcond_estimate)
        : std::runtime_error(what + " (rcond estimate " + std::to_string(rcond_estimate) + ")"),
          rcond_(rcond_estimate) {}

    double rcond_estimate() const noexcept { return rcond_; }

private:
    double rcond_;
};

/// Two 2-form matrices expressed in different bases were combined.
class BasisMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace chtwist
