#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperovals {

enum class ErrorCode {
    EvenDegree,
    UnsupportedDegree,
    NonPrimitiveModulus,
    InvertZero,
    DegeneratePresemifield,
    NonCommutative,
    WrongSize,
    BadShift,
    NotTypeA,
    NotTypeB,
    NotTranslation,
    InfeasibleDomain,
    ParameterMismatch,
    NotADifferenceSet,
    InfinityNotInOval,
    BadInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hyperovals
