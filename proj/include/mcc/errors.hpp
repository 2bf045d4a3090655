#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcc {

enum class ErrorKind {
    DivisionByZero,
    NotPolynomial,
    InvalidRange,
    PoleAtPoint,
    InvalidDimension,
    ParseError,
    UnsupportedIndex,
    UnsupportedR,
    NoFreeSlot,
    MultipleFreeSlots,
    DegreeMismatch,
    AllFormsZero,
    AlreadySemistable,
    ZeroQuotient,
    InvalidArgument,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Base of every error raised by the engine. The kind is stable and is what
/// the command line reports; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed textual input. offset() is a byte offset into the parsed text.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace mcc
