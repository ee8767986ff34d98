#pragma once

#include <stdexcept>
#include <string>

namespace wittkit {

// Base for all library errors. `input_error()` distinguishes bad user input
// (CLI exit code 2) from verification failures (exit code 1), which are not
// exceptions but report statuses.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct InvalidConfig : Error {
    using Error::Error;
};

struct InvalidScaleMap : Error {
    using Error::Error;
};

struct CentralTermPresent : Error {
    CentralTermPresent() : Error("central term not allowed under this bracket rule") {}
};

struct LevelOutOfRange : Error {
    using Error::Error;
};

struct EmptyComponent : Error {
    EmptyComponent() : Error("requested homogeneous component is zero") {}
};

struct ZeroElement : Error {
    ZeroElement() : Error("operation requires a nonzero element") {}
};

struct ZeroGamma : Error {
    ZeroGamma() : Error("gamma must be a nonzero group element") {}
};

struct BetaInSupport : Error {
    BetaInSupport() : Error("beta must avoid the support of x") {}
};

struct MissingImage : Error {
    using Error::Error;
};

struct NotADerivation : Error {
    using Error::Error;
};

struct InconsistentAdditivity : Error {
    using Error::Error;
};

struct TruncationTooShallow : Error {
    using Error::Error;
};

struct MissingUnit : Error {
    MissingUnit() : Error("gamma config does not designate a unit element") {}
};

struct OutOfWindow : Error {
    using Error::Error;
};

struct InconsistentC : Error {
    using Error::Error;
};

struct NotACocycle : Error {
    using Error::Error;
};

struct UnknownGenerator : Error {
    explicit UnknownGenerator(const std::string& name)
        : Error("unknown generator: " + name) {}
};

struct SyntaxError : Error {
    int line, column;
    SyntaxError(const std::string& what, int line_, int col_)
        : Error(what + " at line " + std::to_string(line_) + ", column " + std::to_string(col_)),
          line(line_), column(col_) {}
};

}  // namespace wittkit
