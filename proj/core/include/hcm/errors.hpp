#pragma once

#include <stdexcept>
#include <string>

namespace hcm {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong set sizes, invalid colours, unknown names.
class InputError : public Error {
public:
    using Error::Error;
};

/// Triple vertices given in non-increasing order.
class OrderingError : public InputError {
public:
    using InputError::InputError;
};

/// Vertex or rank outside the ambient hypergraph.
class BoundsError : public InputError {
public:
    using InputError::InputError;
};

/// A colouring cannot be built from the given parameters (e.g. fewer than 3 vertices).
class InstanceError : public InputError {
public:
    using InputError::InputError;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A set expected to be universal failed certification.
class WitnessError : public Error {
public:
    using Error::Error;
};

/// A localized operation was asked to work on too large a set.
class ScopeError : public Error {
public:
    using Error::Error;
};

/// A structure that the underlying theorem guarantees was not found. This can only
/// be caused by an implementation defect and is never expected on valid input.
class FaithfulnessError : public Error {
public:
    using Error::Error;
};

} // namespace hcm
