#pragma once

#include <stdexcept>

namespace maxcurve {

/// An argument violates the documented precondition of an operation
/// (coincident points, degree above the bound, dependent node set, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Serialized input is malformed: bad JSON, bad rational literal,
/// duplicate node, wrong field type.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator ran out of its sampling budget or met a degenerate input.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace maxcurve
