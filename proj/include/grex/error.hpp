#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grex {

enum class ErrorKind {
    ModulusMismatch,
    DivisionByZero,
    NotASquare,
    NotPrime,
    BadParams,
    OffCurve,
    NotInTorsion,
    OrderError,
    RetryLimitExceeded,
    NotInSubgroup,
    VerificationFailed,
    PreconditionViolated,
    NoSolution,
    NotAPower,
    DegenerateSystem,
    NoGeneratingSolution,
    TooLarge,
    NotFound,
    UnsupportedForm,
    Malformed,
};

/// Stable snake_case name, used as the "kind" field of CLI error payloads.
std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
    throw Error(kind, what);
}

} // namespace grex
