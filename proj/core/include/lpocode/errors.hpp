#pragma once

#include <stdexcept>
#include <string>

namespace lpocode {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// External input (word file, CSV, config) is malformed.
class InputError : public Error {
public:
    using Error::Error;
};

/// The instance exceeds a size the library is willing to materialize or search.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An internal self-check failed; always a bug.
class VerificationError : public Error {
public:
    using Error::Error;
};

} // namespace lpocode
