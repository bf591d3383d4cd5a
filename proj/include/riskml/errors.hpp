#pragma once

#include <stdexcept>
#include <string>

namespace riskml {

enum class Err {
    Parse,
    MissingTarget,
    EmptyFeatureSet,
    EmptyCohort,
    Domain,
    ConstantFeature,
    Stratification,
    Shape,
    DegenerateLabels,
    Binning,
    Spec,
    InvalidModel,
    Complexity,
    InsufficientData,
    Name,
    Config,
    Io,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace riskml
