#pragma once

#include <stdexcept>
#include <string>

namespace sumfree {

/// Malformed input or a violated precondition (bad group spec, wrong set size, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap would be exceeded.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A numerical procedure could not reach the requested accuracy.
class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sumfree
