#pragma once

#include <stdexcept>
#include <string>

namespace zhash {

// Invalid construction parameters (zero range, d < 2, odd kappa, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A key outside the admissible universe [0, p).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed input data: duplicate keys, duplicate inserts, bad blobs.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation not defined for this graph arity.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Randomized construction gave up after its attempt cap.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zhash
