#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lorenz {

enum class ErrorKind {
    // numberfield
    NoRootInInterval,
    MultipleRootsInInterval,
    NonSquarefree,
    DivisionByZero,
    FieldMismatch,
    ZeroDivisor,
    PrecisionExhausted,
    // lorenzmap
    OrderViolation,
    NotExpanding,
    CriticalOutOfRange,
    SlopesNotDistinct,
    AmbiguousCritical,
    RequiresSide,
    EmptyInterval,
    // cycles
    SlopeOneLap,
    OutOfBound,
    // renorm
    NoPointLeftOfC,
    NoPointRightOfC,
    // markov
    NotEventuallyPeriodic,
    AlignmentFailure,
    // cli
    ConfigParse,
    UnknownFixture,
};

std::string_view to_string(ErrorKind kind);

class LorenzError : public std::runtime_error {
public:
    LorenzError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace lorenz
