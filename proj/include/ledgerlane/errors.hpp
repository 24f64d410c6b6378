#pragma once

#include <stdexcept>
#include <string>

namespace ledgerlane {

enum class ErrorCode {
    NotFound,
    AlreadyExists,
    NotAuthorized,
    BadSignature,
    UnknownPrincipal,
    IntegrityViolation,
    InvalidRole,
    EmptyId,
    InvalidId,
    DuplicateTx,
    EmptyBatch,
    ParseError,
    SchemaError,
    MalformedQuery,
    NotUntrustedSource,
    ZeroValidators,
    NoActiveValidators,
    Rejected,
    IoError,
    Usage,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

// Stable process exit codes for the CLI. 0 = success, 1 = unexpected failure.
inline int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::Usage:
        return 2;
    case ErrorCode::NotFound:
        return 3;
    case ErrorCode::AlreadyExists:
        return 4;
    case ErrorCode::NotAuthorized:
    case ErrorCode::BadSignature:
    case ErrorCode::UnknownPrincipal:
        return 5;
    case ErrorCode::IntegrityViolation:
        return 6;
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::MalformedQuery:
    case ErrorCode::InvalidRole:
    case ErrorCode::EmptyId:
    case ErrorCode::InvalidId:
        return 7;
    case ErrorCode::Rejected:
        return 8;
    default:
        return 9;
    }
}

} // namespace ledgerlane
