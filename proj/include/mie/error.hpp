#ifndef MIE_ERROR_HPP
#define MIE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mie {

enum class ErrorKind {
    DuplicateId,
    MonisticViolation,
    MaskOutsideMC,
    InvalidProbability,
    PartialFunction,
    WorldOutsideDomain,
    DuplicateLabel,
    DegenerateSpace,
    UnknownLabel,
    NotTotal,
    InconsistentCardinalities,
    DomainMismatch,
    InvalidErrorSum,
    OutOfRange,
    EmptyField,
    LabelCollision,
    AcquisitionExhausted,
    KTooLarge,
    InvalidRanking,
    FocusOutsideIB,
    InvalidVenn,
    RadiusUnderflow,
    InfeasibleShape,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain-level failure. Every precondition violation in the library is
/// reported through this type; `kind()` identifies which one.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace mie

#endif
