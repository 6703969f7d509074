#pragma once

#include <stdexcept>
#include <string>

namespace isotree {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A region or cut refers to a site the graph does not have.
class InvalidRegionError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (disconnected graph, zero size, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration refused because the graph is larger than the cap.
class SizeLimitError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A signature class of sites carries more than one f value.
class InconsistentZoneError : public Error {
public:
    using Error::Error;
};

/// Zones and cuts do not assemble into a free tree.
class NotATreeError : public Error {
public:
    using Error::Error;
};

class MissingReferenceError : public Error {
public:
    using Error::Error;
};

class NotAnLCutError : public Error {
public:
    using Error::Error;
};

/// Raised when an algorithm reaches a state its inputs should make impossible.
class InternalInconsistencyError : public Error {
public:
    using Error::Error;
};

/// The brute-force oracle found a structural property that the theory guarantees to be violated.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

/// Malformed input bytes (JSON syntax, PGM header, truncated payload).
class ParseError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Well-formed input whose content breaks a document invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace isotree
