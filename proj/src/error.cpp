#include "hyperovals/error.hpp"

namespace hyperovals {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EvenDegree: return "EvenDegree";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::NonPrimitiveModulus: return "NonPrimitiveModulus";
    case ErrorCode::InvertZero: return "InvertZero";
    case ErrorCode::DegeneratePresemifield: return "DegeneratePresemifield";
    case ErrorCode::NonCommutative: return "NonCommutative";
    case ErrorCode::WrongSize: return "WrongSize";
    case ErrorCode::BadShift: return "BadShift";
    case ErrorCode::NotTypeA: return "NotTypeA";
    case ErrorCode::NotTypeB: return "NotTypeB";
    case ErrorCode::NotTranslation: return "NotTranslation";
    case ErrorCode::InfeasibleDomain: return "InfeasibleDomain";
    case ErrorCode::ParameterMismatch: return "ParameterMismatch";
    case ErrorCode::NotADifferenceSet: return "NotADifferenceSet";
    case ErrorCode::InfinityNotInOval: return "InfinityNotInOval";
    case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace hyperovals
