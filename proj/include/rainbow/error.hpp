#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

enum class ErrorKind {
    DuplicateInRow,
    DuplicateInColumn,
    SymbolOutOfRange,
    EmptyCellUnsupported,
    Parse,
    NotSquare,
    NotSquareView,
    BadView,
    KTooLarge,
    KNotOdd,
    MOutOfRange,
    InvalidDimensions,
    DimensionMismatch,
    PreconditionViolated,
    Internal,
};

// Single exception type for the whole library; `kind` is stable enough to
// translate into C API status codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace rainbow
