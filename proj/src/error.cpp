#include "grex/error.hpp"

namespace grex {

std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ModulusMismatch: return "modulus_mismatch";
    case ErrorKind::DivisionByZero: return "division_by_zero";
    case ErrorKind::NotASquare: return "not_a_square";
    case ErrorKind::NotPrime: return "not_prime";
    case ErrorKind::BadParams: return "bad_params";
    case ErrorKind::OffCurve: return "off_curve";
    case ErrorKind::NotInTorsion: return "not_in_torsion";
    case ErrorKind::OrderError: return "order_error";
    case ErrorKind::RetryLimitExceeded: return "retry_limit_exceeded";
    case ErrorKind::NotInSubgroup: return "not_in_subgroup";
    case ErrorKind::VerificationFailed: return "verification_failed";
    case ErrorKind::PreconditionViolated: return "precondition_violated";
    case ErrorKind::NoSolution: return "no_solution";
    case ErrorKind::NotAPower: return "not_a_power";
    case ErrorKind::DegenerateSystem: return "degenerate_system";
    case ErrorKind::NoGeneratingSolution: return "no_generating_solution";
    case ErrorKind::TooLarge: return "too_large";
    case ErrorKind::NotFound: return "not_found";
    case ErrorKind::UnsupportedForm: return "unsupported_form";
    case ErrorKind::Malformed: return "malformed";
    }
    return "unknown";
}

} // namespace grex
