#include "riskml/errors.hpp"

namespace riskml {

const char* err_name(Err e) {
    switch (e) {
        case Err::Parse: return "ParseError";
        case Err::MissingTarget: return "MissingTarget";
        case Err::EmptyFeatureSet: return "EmptyFeatureSet";
        case Err::EmptyCohort: return "EmptyCohort";
        case Err::Domain: return "DomainError";
        case Err::ConstantFeature: return "ConstantFeature";
        case Err::Stratification: return "StratificationError";
        case Err::Shape: return "ShapeError";
        case Err::DegenerateLabels: return "DegenerateLabels";
        case Err::Binning: return "BinningError";
        case Err::Spec: return "SpecError";
        case Err::InvalidModel: return "InvalidModel";
        case Err::Complexity: return "ComplexityGuard";
        case Err::InsufficientData: return "InsufficientData";
        case Err::Name: return "NameError";
        case Err::Config: return "ConfigError";
        case Err::Io: return "IoError";
    }
    return "Error";
}

} // namespace riskml
