#include "mie/error.hpp"

namespace mie {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::MonisticViolation: return "MonisticViolation";
    case ErrorKind::MaskOutsideMC: return "MaskOutsideMC";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::PartialFunction: return "PartialFunction";
    case ErrorKind::WorldOutsideDomain: return "WorldOutsideDomain";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::DegenerateSpace: return "DegenerateSpace";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::InconsistentCardinalities: return "InconsistentCardinalities";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidErrorSum: return "InvalidErrorSum";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::EmptyField: return "EmptyField";
    case ErrorKind::LabelCollision: return "LabelCollision";
    case ErrorKind::AcquisitionExhausted: return "AcquisitionExhausted";
    case ErrorKind::KTooLarge: return "KTooLarge";
    case ErrorKind::InvalidRanking: return "InvalidRanking";
    case ErrorKind::FocusOutsideIB: return "FocusOutsideIB";
    case ErrorKind::InvalidVenn: return "InvalidVenn";
    case ErrorKind::RadiusUnderflow: return "RadiusUnderflow";
    case ErrorKind::InfeasibleShape: return "InfeasibleShape";
    }
    return "Unknown";
}

} // namespace mie
