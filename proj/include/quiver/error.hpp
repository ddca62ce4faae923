#pragma once

#include <stdexcept>
#include <string>

namespace quiver {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class InvalidRankConditions : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidPath : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ArityMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class MissingExpansion : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class RectangleNotContained : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// The pair handed to the involution is not in the domain P_a.
class NotInDomain : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class LoopCapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace quiver
