#pragma once

#include <stdexcept>
#include <string>

namespace surflines {

/// Base class for every mathematical or domain failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem or formula was asked for outside the range where it is proved.
class InapplicableError : public Error {
public:
    using Error::Error;
};

/// The requested quantity does not exist for this input (e.g. a quotient by s = 0).
class UndefinedValueError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Input violates a documented precondition or type invariant.
class InvalidInput : public Error {
public:
    using Error::Error;
};

} // namespace surflines
