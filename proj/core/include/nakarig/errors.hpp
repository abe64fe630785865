#pragma once

#include <stdexcept>
#include <string>

namespace nakarig {

/// An argument lies outside the domain of an operation (bad layer, i < 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The closed forms only cover m >= n (and some need n > 1).
class UnsupportedParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exhaustive search refused because the subset count exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace nakarig
