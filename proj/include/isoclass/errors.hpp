#pragma once

#include <stdexcept>
#include <string>

namespace isoclass {

// Input violates a documented precondition (odd k, zero vector, non-prime p, ...).
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside what this library implements.
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace isoclass
