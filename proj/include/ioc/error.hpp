#pragma once

#include <stdexcept>
#include <string>

namespace ioc {

/// Failure categories shared by every module. The numeric values are part of
/// the C API (see ioc.h) and must not be reordered.
enum class ErrorCode {
    InvalidVertex = 1,
    EmptyGraph = 2,
    Disconnected = 3,
    NotATree = 4,
    NotPresent = 5,
    UniverseMismatch = 6,
    NoCode = 7,
    TooLarge = 8,
    BadParam = 9,
    NotInFamily = 10,
    TooSmall = 11,
    DegreeExceeded = 12,
    FourCyclePresent = 13,
    ParseError = 14,
    Internal = 15,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ioc
