#pragma once

#include <stdexcept>
#include <string>

namespace vspace {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input file / value.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Operation applied to a table of the wrong kind (tau-form vs V-form).
class KindError : public Error {
public:
    using Error::Error;
};

/// A theorem check was called on a table outside the theorem's hypotheses.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Requested size exceeds what the exhaustive routines accept.
class SizeError : public Error {
public:
    using Error::Error;
};

}  // namespace vspace
