#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperjac {

// Error taxonomy shared by all modules. The CLI maps kinds to exit codes:
// CapExceeded -> 3, everything else -> 2.
enum class ErrorKind {
    Value,             // bad argument: not a prime, out of range, field mismatch
    Syntax,            // expression parse failure; carries a byte offset
    Unsupported,       // well-formed but outside the supported grammar/structure
    NotSquarefree,
    NotMonic,
    CharDividesDegree,
    CapExceeded,
    WeilBoundViolation,
    InvariantViolation,
    OddOrSmallN,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}
    Error(ErrorKind kind, std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), kind_(kind), offset_(offset) {}

    ErrorKind kind() const noexcept { return kind_; }
    // Byte offset into the source text; only meaningful for Syntax.
    std::size_t offset() const noexcept { return offset_; }

private:
    ErrorKind kind_;
    std::size_t offset_ = 0;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Value: return "ValueError";
        case ErrorKind::Syntax: return "SyntaxError";
        case ErrorKind::Unsupported: return "UnsupportedStructure";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::CharDividesDegree: return "CharDividesDegree";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::WeilBoundViolation: return "WeilBoundViolation";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::OddOrSmallN: return "OddOrSmallN";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

}  // namespace hyperjac
