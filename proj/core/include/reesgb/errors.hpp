#pragma once

#include <stdexcept>
#include <string>

namespace reesgb {

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unacceptable input (bad graph files, bad vectors, ...).
/// CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A hard cap on an exhaustive computation was exceeded. Exit code 3.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

class OddCycleError : public InputError {
public:
    using InputError::InputError;
};

class DuplicateEdgeError : public InputError {
public:
    using InputError::InputError;
};

class EmptyGraphError : public InputError {
public:
    using InputError::InputError;
};

class EmptyComponentError : public InputError {
public:
    using InputError::InputError;
};

class NotMaximalError : public InputError {
public:
    using InputError::InputError;
};

class MalformedWalkError : public InputError {
public:
    using InputError::InputError;
};

class MalformedCircuitError : public InputError {
public:
    using InputError::InputError;
};

class DimensionMismatchError : public InputError {
public:
    using InputError::InputError;
};

/// Regularity statistics were requested from a Betti table whose window
/// is not certified to contain all nonzero entries.
class IncompleteTableError : public Error {
public:
    using Error::Error;
};

}  // namespace reesgb
