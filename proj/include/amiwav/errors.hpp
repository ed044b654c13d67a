#pragma once

#include <stdexcept>
#include <string>

namespace amiwav {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller violated an operation's preconditions (bad level, bad k, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Input data violated an invariant (non-finite sample, bad CSV row, ...).
class DataError : public Error {
public:
    using Error::Error;
};

// A composite object is internally inconsistent (coefficient length
// mismatch, empty class, declared counts not matching body contents).
class StructureError : public Error {
public:
    using Error::Error;
};

// Lookup of a customer or group that is not present.
class NotFoundError : public Error {
public:
    using Error::Error;
};

// A profile that cannot be normalized or scaled (all-zero load).
class DegenerateProfileError : public Error {
public:
    using Error::Error;
};

// File-level failures: unreadable path, corrupt header, truncated body,
// unsupported format version.
class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace amiwav
