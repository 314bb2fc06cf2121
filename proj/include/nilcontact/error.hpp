#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilcontact {

enum class ErrorKind {
    InvalidRank,
    EmptyMarking,
    InvalidMarking,
    InvalidPartition,
    UnknownExceptionalKey,
    ZeroOrbit,
    UnsupportedType,
    UnknownClassification,
    NotAPolarization,
    NoPolarization,
    DimensionMismatch,
    SizeCap,
    NonFiniteFiber,
    ZeroElement,
    UnknownSuite,
    InvalidArgument,
    ParseError,
    TableFormat,
};

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::EmptyMarking: return "EmptyMarking";
    case ErrorKind::InvalidMarking: return "InvalidMarking";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::UnknownExceptionalKey: return "UnknownExceptionalKey";
    case ErrorKind::ZeroOrbit: return "ZeroOrbit";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::UnknownClassification: return "UnknownClassification";
    case ErrorKind::NotAPolarization: return "NotAPolarization";
    case ErrorKind::NoPolarization: return "NoPolarization";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NonFiniteFiber: return "NonFiniteFiber";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TableFormat: return "TableFormat";
    }
    return "Unknown";
}

/// Domain error carrying a machine-readable kind alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace nilcontact
