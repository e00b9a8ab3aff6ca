#pragma once

#include <stdexcept>
#include <string>

namespace stancewalk {

/// Base of all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable files and streams.
class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid data or configuration: missing seeds, empty inputs, malformed records in strict mode.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An operation needs post-level records but only pre-aggregated counts were supplied.
class UnsupportedInputError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace stancewalk
