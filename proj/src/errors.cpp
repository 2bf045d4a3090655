#include "mcc/errors.hpp"

namespace mcc {

std::string_view kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotPolynomial: return "NotPolynomial";
        case ErrorKind::InvalidRange: return "InvalidRange";
        case ErrorKind::PoleAtPoint: return "PoleAtPoint";
        case ErrorKind::InvalidDimension: return "InvalidDimension";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
        case ErrorKind::UnsupportedR: return "UnsupportedR";
        case ErrorKind::NoFreeSlot: return "NoFreeSlot";
        case ErrorKind::MultipleFreeSlots: return "MultipleFreeSlots";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::AllFormsZero: return "AllFormsZero";
        case ErrorKind::AlreadySemistable: return "AlreadySemistable";
        case ErrorKind::ZeroQuotient: return "ZeroQuotient";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string describe(const std::vector<std::string>& expected) {
    std::string out;
    for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::ParseError,
            "at offset " + std::to_string(offset) + ": expected " + describe(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

}  // namespace mcc
