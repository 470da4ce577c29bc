#ifndef COBORDISM_ERRORS_HPP
#define COBORDISM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cobordism {

enum class ErrorKind {
    VariableMismatch,
    NotDivisible,
    NotInvertible,
    DivisionByZero,
    TruncationInsufficient,
    NotAClass,
    NoSolution,
    Ambiguous,
    HypothesisViolation,
    ZeroCharacter,
    InvalidArgument,
    Parse,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

    // True for failures that are statements about mathematics (the input is
    // well formed but the requested identity does not hold).
    bool is_mathematical() const noexcept
    {
        switch (kind_) {
        case ErrorKind::NotDivisible:
        case ErrorKind::NotInvertible:
        case ErrorKind::NotAClass:
        case ErrorKind::NoSolution:
        case ErrorKind::Ambiguous:
        case ErrorKind::TruncationInsufficient:
        case ErrorKind::HypothesisViolation:
        case ErrorKind::ZeroCharacter:
        case ErrorKind::DivisionByZero:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::NotAClass: return "NotAClass";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::ZeroCharacter: return "ZeroCharacter";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

} // namespace cobordism

#endif
