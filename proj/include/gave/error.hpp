#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gave {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    SingularMatrix,
    NonNegativityViolation,
    NotSymmetric,
    NotPositiveDefinite,
    SingularIterationMatrix,
    InvalidSplitting,
    InvalidOmega,
    InvalidParams,
    TooLarge,
    TooLargeForDense,
    ParseError,
    IoError,
    ConfigError,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NonNegativityViolation: return "NonNegativityViolation";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::SingularIterationMatrix: return "SingularIterationMatrix";
        case ErrorCode::InvalidSplitting: return "InvalidSplitting";
        case ErrorCode::InvalidOmega: return "InvalidOmega";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::TooLargeForDense: return "TooLargeForDense";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gave
