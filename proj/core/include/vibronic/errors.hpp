// Copyright 2026 The vibronic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vibronic {

// Every failure mode carries a stable machine-parsable kind tag; what() is
// always "<KindName>: <detail>".
enum class ErrorKind {
    NotOrthogonal,
    SingularJ,
    BadModeIndex,
    OddDimension,
    SingularSigmaQ,
    PatternTooLarge,
    TooLarge,
    Internal,
    ParseError,
    ValidationError,
    IoError,
};

inline const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotOrthogonal:   return "NotOrthogonal";
        case ErrorKind::SingularJ:       return "SingularJ";
        case ErrorKind::BadModeIndex:    return "BadModeIndex";
        case ErrorKind::OddDimension:    return "OddDimension";
        case ErrorKind::SingularSigmaQ:  return "SingularSigmaQ";
        case ErrorKind::PatternTooLarge: return "PatternTooLarge";
        case ErrorKind::TooLarge:        return "TooLarge";
        case ErrorKind::Internal:        return "Internal";
        case ErrorKind::ParseError:      return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::IoError:         return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
          kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct NotOrthogonalError final : Error {
    explicit NotOrthogonalError(const std::string& d) : Error(ErrorKind::NotOrthogonal, d) {}
};
struct SingularJError final : Error {
    explicit SingularJError(const std::string& d) : Error(ErrorKind::SingularJ, d) {}
};
struct BadModeIndexError final : Error {
    explicit BadModeIndexError(const std::string& d) : Error(ErrorKind::BadModeIndex, d) {}
};
struct OddDimensionError final : Error {
    explicit OddDimensionError(const std::string& d) : Error(ErrorKind::OddDimension, d) {}
};
struct SingularSigmaQError final : Error {
    explicit SingularSigmaQError(const std::string& d) : Error(ErrorKind::SingularSigmaQ, d) {}
};
struct PatternTooLargeError final : Error {
    explicit PatternTooLargeError(const std::string& d) : Error(ErrorKind::PatternTooLarge, d) {}
};
struct TooLargeError final : Error {
    explicit TooLargeError(const std::string& d) : Error(ErrorKind::TooLarge, d) {}
};
struct InternalError final : Error {
    explicit InternalError(const std::string& d) : Error(ErrorKind::Internal, d) {}
};
struct ParseError final : Error {
    explicit ParseError(const std::string& d) : Error(ErrorKind::ParseError, d) {}
};
struct ValidationError final : Error {
    explicit ValidationError(const std::string& d) : Error(ErrorKind::ValidationError, d) {}
};
struct IoError final : Error {
    explicit IoError(const std::string& d) : Error(ErrorKind::IoError, d) {}
};

}  // namespace vibronic
