#include "lorenz/error.hpp"

namespace lorenz {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NoRootInInterval: return "NoRootInInterval";
    case ErrorKind::MultipleRootsInInterval: return "MultipleRootsInInterval";
    case ErrorKind::NonSquarefree: return "NonSquarefree";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::NotExpanding: return "NotExpanding";
    case ErrorKind::CriticalOutOfRange: return "CriticalOutOfRange";
    case ErrorKind::SlopesNotDistinct: return "SlopesNotDistinct";
    case ErrorKind::AmbiguousCritical: return "AmbiguousCritical";
    case ErrorKind::RequiresSide: return "RequiresSide";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::SlopeOneLap: return "SlopeOneLap";
    case ErrorKind::OutOfBound: return "OutOfBound";
    case ErrorKind::NoPointLeftOfC: return "NoPointLeftOfC";
    case ErrorKind::NoPointRightOfC: return "NoPointRightOfC";
    case ErrorKind::NotEventuallyPeriodic: return "NotEventuallyPeriodic";
    case ErrorKind::AlignmentFailure: return "AlignmentFailure";
    case ErrorKind::ConfigParse: return "ConfigParse";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    }
    return "Unknown";
}

} // namespace lorenz
