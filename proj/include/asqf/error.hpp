#ifndef ASQF_ERROR_HPP
#define ASQF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace asqf {

// Every failure the library can signal deliberately. Callers that need to
// distinguish input mistakes from broken internal invariants should switch
// on the kind: InternalCheckFailed and NoConsistentClass mean two routes
// that must agree did not, everything else is a precondition violation.
enum class ErrorKind {
    NotPrime,
    EvenCharacteristic,
    ReducibleModulus,
    DegreeMismatch,
    ShiftOutOfRange,
    NotADivisor,
    NotInBaseField,
    NotInSubfield,
    BudgetExceeded,
    ContextMismatch,
    RankViewOutOfRange,
    CoefficientsNotInBaseField,
    NotABasis,
    NoConsistentClass,
    BothZero,
    ZeroPolynomial,
    NotSelfAdjoint,
    HypothesisViolated,
    ParameterOrderViolated,
    DegenerateForm,
    CancellationConditionFails,
    AlphasDependent,
    DivisionByZero,
    InvalidInput,
    InternalCheckFailed,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::ShiftOutOfRange: return "ShiftOutOfRange";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::NotInBaseField: return "NotInBaseField";
        case ErrorKind::NotInSubfield: return "NotInSubfield";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::RankViewOutOfRange: return "RankViewOutOfRange";
        case ErrorKind::CoefficientsNotInBaseField: return "CoefficientsNotInBaseField";
        case ErrorKind::NotABasis: return "NotABasis";
        case ErrorKind::NoConsistentClass: return "NoConsistentClass";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::ParameterOrderViolated: return "ParameterOrderViolated";
        case ErrorKind::DegenerateForm: return "DegenerateForm";
        case ErrorKind::CancellationConditionFails: return "CancellationConditionFails";
        case ErrorKind::AlphasDependent: return "AlphasDependent";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "UnknownError";
}

} // namespace asqf

#endif
