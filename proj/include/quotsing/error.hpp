#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quotsing {

enum class ErrorKind {
    MalformedInput,
    DimensionMismatch,
    NotSpecialLinear,
    NonPositiveOrder,
    GroupTooLarge,
    BoxTooLarge,
    NotInvariant,
    WeightMismatch,
    NotClosed,
    ScaleExceeded,
    EmptySubset,
    Theo22Violation,
};

std::string_view to_string(ErrorKind kind);

/// Rejected input (CLI exit code 2).
bool is_input_error(ErrorKind kind);
/// A configured resource bound was hit (CLI exit code 3).
bool is_resource_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace quotsing
