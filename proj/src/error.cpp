#include "lrc/error.hpp"

namespace lrc {

std::string_view errc_name(Errc c) {
    switch (c) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::DivideByZero: return "DivideByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NoSolution: return "NoSolution";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::DependentThickColumns: return "DependentThickColumns";
    case Errc::TooLarge: return "TooLarge";
    case Errc::EmptySupport: return "EmptySupport";
    case Errc::EmptyShortening: return "EmptyShortening";
    case Errc::NotOptimalInput: return "NotOptimalInput";
    case Errc::QOutOfRange: return "QOutOfRange";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::InfeasibleParams: return "InfeasibleParams";
    case Errc::InfeasibleComponent: return "InfeasibleComponent";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::Unrecoverable: return "Unrecoverable";
    case Errc::RepairFailed: return "RepairFailed";
    case Errc::RepairUndefined: return "RepairUndefined";
    case Errc::ExhaustedAttempts: return "ExhaustedAttempts";
    case Errc::StageOneFailed: return "StageOneFailed";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    }
    return "Unknown";
}

}  // namespace lrc
