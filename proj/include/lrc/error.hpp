#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

enum class Errc {
    NonPrimeCharacteristic,
    ReduciblePolynomial,
    DivideByZero,
    FieldMismatch,
    FieldTooLarge,
    SingularMatrix,
    ShapeMismatch,
    NoSolution,
    DuplicatePoints,
    RankDeficient,
    DependentThickColumns,
    TooLarge,
    EmptySupport,
    EmptyShortening,
    NotOptimalInput,
    QOutOfRange,
    FieldTooSmall,
    InfeasibleParams,
    InfeasibleComponent,
    DivisibilityViolation,
    PreconditionViolated,
    Unrecoverable,
    RepairFailed,
    RepairUndefined,
    ExhaustedAttempts,
    StageOneFailed,
    InvalidDescriptor,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace lrc
