#pragma once

#include <stdexcept>
#include <string>

namespace legr {

enum class ErrorCode {
    IndexOutOfRange,
    PotentialMismatchAtRightCusp,
    EmptyVertex,
    ArityMismatch,
    PotentialMismatch,
    PatternMismatch,
    InvalidSite,
    SyntaxError,
    IrrationalEvaluation,
    ZeroPolynomial,
    InvalidInvolution,
    InvalidArgument,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// parse errors keep their position around so the cli can point at it
class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& msg)
        : Error(ErrorCode::SyntaxError,
                std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column), message_(msg) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

}  // namespace legr
