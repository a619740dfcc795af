#include "dimcalc/error.hpp"

namespace dimcalc {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InadmissibleMeasure: return "InadmissibleMeasure";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotEquidimensional: return "NotEquidimensional";
    case Errc::ModeForbidsNegation: return "ModeForbidsNegation";
    case Errc::NotABasis: return "NotABasis";
    case Errc::ExponentsNotDivisible: return "ExponentsNotDivisible";
    case Errc::MeasureNotPerfectPower: return "MeasureNotPerfectPower";
    case Errc::NonPositiveMeasure: return "NonPositiveMeasure";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DependentColumns: return "DependentColumns";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ModelInvalid: return "ModelInvalid";
    case Errc::DuplicateUnit: return "DuplicateUnit";
    case Errc::UnknownUnit: return "UnknownUnit";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ParseError: return "ParseError";
    case Errc::SemanticError: return "SemanticError";
    }
    return "Error";
}

} // namespace dimcalc
