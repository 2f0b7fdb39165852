#include "quotsing/error.hpp"

namespace quotsing {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotSpecialLinear: return "NotSpecialLinear";
        case ErrorKind::NonPositiveOrder: return "NonPositiveOrder";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::BoxTooLarge: return "BoxTooLarge";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::WeightMismatch: return "WeightMismatch";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::ScaleExceeded: return "ScaleExceeded";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::Theo22Violation: return "Theo22Violation";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::NotSpecialLinear:
        case ErrorKind::NonPositiveOrder:
        case ErrorKind::NotInvariant:
        case ErrorKind::WeightMismatch:
        case ErrorKind::NotClosed:
        case ErrorKind::EmptySubset:
            return true;
        default:
            return false;
    }
}

bool is_resource_error(ErrorKind kind) {
    return kind == ErrorKind::GroupTooLarge || kind == ErrorKind::BoxTooLarge ||
           kind == ErrorKind::ScaleExceeded;
}

}  // namespace quotsing
