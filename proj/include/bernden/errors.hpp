#pragma once

#include <stdexcept>
#include <string>

namespace bernden {

/// Base p < 2 passed where a radix is required.
class InvalidBase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A composite number passed where a prime is required.
class NotPrime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (k > n, odd n, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition of a theorem does not hold for the input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace bernden
