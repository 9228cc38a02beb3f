#ifndef SATGRAPH_ERRORS_HPP
#define SATGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace satgraph {

/// Caller broke a documented precondition.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input data could not be decoded into a well-formed value.
class MalformedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejection sampling gave up before finding an acceptable sample.
class AttemptsExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decoded data is well-formed but breaks a structural invariant.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TooManyConstraints : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Constraint threads still collide at every available level.
class NotSeparated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A structure that passed verification contradicted itself later on.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace satgraph

#endif  // SATGRAPH_ERRORS_HPP
