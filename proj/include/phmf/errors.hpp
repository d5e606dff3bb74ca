#pragma once

#include <stdexcept>

namespace phmf {

// One exception type per rejection reason, so callers and tests can
// distinguish "bad input shape" from "valid input outside a method's range".
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotCoprime : DomainError {
    using DomainError::DomainError;
};
struct BadDiscriminant : DomainError {
    using DomainError::DomainError;
};
struct ZeroDiscriminant : BadDiscriminant {
    using BadDiscriminant::BadDiscriminant;
};
struct SquareDiscriminant : BadDiscriminant {
    using BadDiscriminant::BadDiscriminant;
};
struct NotDivisible : DomainError {
    using DomainError::DomainError;
};
struct BadModulus : DomainError {
    using DomainError::DomainError;
};
struct PoleAtOne : DomainError {
    using DomainError::DomainError;
};
struct ConvergenceRegion : DomainError {
    using DomainError::DomainError;
};
struct PlusCondition : DomainError {
    using DomainError::DomainError;
};
struct MethodUnavailable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParameterOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct Unsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace phmf
