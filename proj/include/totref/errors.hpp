#pragma once

#include <stdexcept>
#include <string>

namespace totref {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands belong to different coefficient fields.
struct FieldMismatch : Error {
    using Error::Error;
};

/// Matrix/vector dimensions do not line up.
struct ShapeError : Error {
    using Error::Error;
};

/// Operands live over different rings S_i.
struct RingMismatch : Error {
    using Error::Error;
};

/// An x-degree beyond the configured cap appeared in a Q_i computation.
struct CapExceeded : Error {
    using Error::Error;
};

/// An entry or element violates the linear-form requirement.
struct NotLinear : Error {
    using Error::Error;
};

/// The matrix cannot be brought to the x·I + sum B_j y_j shape.
struct NotNormalizable : Error {
    using Error::Error;
};

/// The zero element was passed where a nonzero one is required.
struct ZeroElement : Error {
    using Error::Error;
};

/// An enumeration would exceed the configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

/// Action matrices do not define a module over S_i.
struct InvalidModule : Error {
    using Error::Error;
};

/// Family parameters repeat.
struct DuplicateLambdas : Error {
    using Error::Error;
};

}  // namespace totref
