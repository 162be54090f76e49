#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvature {

enum class ErrorKind {
    InvalidArgument,
    ParseError,
    MatricesDiffer,
    NotRealizable,
    InvalidClusterStructure,
    IndexOutOfRange,
    DimensionMismatch,
    NotNormalized,
    EmptyIndexSet,
    InvalidRange,
    SizeLimitExceeded,
    NotSymmetric,
    NotPSD,
    RankDisagreement,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MatricesDiffer: return "MatricesDiffer";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::InvalidClusterStructure: return "InvalidClusterStructure";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::RankDisagreement: return "RankDisagreement";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

} // namespace curvature
