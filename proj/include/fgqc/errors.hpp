#pragma once

#include <stdexcept>
#include <string>

namespace fgqc {

// contract violations are exceptions; recoverable signals (a circulant that
// happens to be singular, a decode that does not converge) are optionals on
// the functions that produce them.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeCharacteristic : Error {
    using Error::Error;
};
struct FieldTooLarge : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct NotASubfield : Error {
    using Error::Error;
};

struct UnknownGeometry : Error {
    using Error::Error;
};
struct GeometryTooLarge : Error {
    using Error::Error;
};
struct SamePoint : Error {
    using Error::Error;
};
struct NonPrimitiveOrbit : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};
struct PivotNotInvertible : Error {
    using Error::Error;
};

struct NoInvertibleBlock : Error {
    using Error::Error;
};
struct TooFewClasses : Error {
    using Error::Error;
};
struct BadBlockLength : Error {
    using Error::Error;
};
struct MalformedKey : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};
struct MalformedFrame : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

}  // namespace fgqc
