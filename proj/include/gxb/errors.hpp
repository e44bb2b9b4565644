#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gxb {

enum class ErrorKind {
    NotAGroup,
    UnknownBuiltin,
    InvalidElement,
    GroupTooLarge,
    NotNormal,
    NotAbelian,
    NotCentral,
    NotSurjective,
    NotAHomomorphism,
    DegreeTooHigh,
    BudgetExceeded,
    NonTrivialAction,
    NotACocycle,
    BetaNotCocycle,
    ParentMismatch,
    InvalidGrading,
    MalformedInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and used by the
/// CLI to choose an exit code; `what()` names the offending datum.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonTrivialAction: return "NonTrivialAction";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::BetaNotCocycle: return "BetaNotCocycle";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::InvalidGrading: return "InvalidGrading";
    case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

} // namespace gxb
