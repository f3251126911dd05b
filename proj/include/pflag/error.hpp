#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pflag {

/// Error names reported by the library and the CLI.
enum class ErrorCode {
    InvalidArgument,
    ConductorMismatch,
    NoEmbedding,
    PrecisionOverflow,
    CapExceeded,
    NoReflections,
    DegreeExtractionFailed,
    NotReflectionGenerated,
    BoundExceeded,
    NotPrimitive,
    NotPrimitiveRoot,
    InvalidL,
    HypothesisViolated,
    ParseError,
    NonInvertibleGenerator,
    UnknownGroup,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ConductorMismatch: return "ConductorMismatch";
        case ErrorCode::NoEmbedding: return "NoEmbedding";
        case ErrorCode::PrecisionOverflow: return "PrecisionOverflow";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NoReflections: return "NoReflections";
        case ErrorCode::DegreeExtractionFailed: return "DegreeExtractionFailed";
        case ErrorCode::NotReflectionGenerated: return "NotReflectionGenerated";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::NotPrimitiveRoot: return "NotPrimitiveRoot";
        case ErrorCode::InvalidL: return "InvalidL";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonInvertibleGenerator: return "NonInvertibleGenerator";
        case ErrorCode::UnknownGroup: return "UnknownGroup";
    }
    return "Unknown";
}

/// A domain error: the input was well-formed but the mathematics refuses it.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace pflag
