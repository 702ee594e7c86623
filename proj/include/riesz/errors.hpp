#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

enum class Errc {
    BadFieldSpec,
    ReducibleField,
    DivisionByZero,
    PrecisionCap,
    NotAMember,
    BadCoords,
    ProperIntersection,
    NotDense,
    SearchBudget,
    NotComparable,
    ConditionsFail,
    InternalProofGap,
    ModeMismatch,
    DimensionMismatch,
    TooLarge,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::BadFieldSpec: return "BadFieldSpec";
    case Errc::ReducibleField: return "ReducibleField";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PrecisionCap: return "PrecisionCap";
    case Errc::NotAMember: return "NotAMember";
    case Errc::BadCoords: return "BadCoords";
    case Errc::ProperIntersection: return "ProperIntersection";
    case Errc::NotDense: return "NotDense";
    case Errc::SearchBudget: return "SearchBudget";
    case Errc::NotComparable: return "NotComparable";
    case Errc::ConditionsFail: return "ConditionsFail";
    case Errc::InternalProofGap: return "InternalProofGap";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace riesz
