#pragma once

#include <stdexcept>
#include <string>

namespace arr {

// Base class for everything the library throws on bad input or a violated
// precondition. Internal consistency violations (a theorem assertion that
// cannot fail on valid data) surface as CheckFailure.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ARR_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                             \
        Name() : Error(#Name) {}                                      \
        explicit Name(const std::string& what)                        \
            : Error(std::string(#Name) + ": " + what) {}              \
    }

ARR_DEFINE_ERROR(DivisionByZero);
ARR_DEFINE_ERROR(DescriptorMismatch);
ARR_DEFINE_ERROR(NoSuchRoot);
ARR_DEFINE_ERROR(ZeroVector);
ARR_DEFINE_ERROR(CoincidentLines);
ARR_DEFINE_ERROR(CoincidentPoints);
ARR_DEFINE_ERROR(DegenerateQuad);
ARR_DEFINE_ERROR(DuplicateLine);
ARR_DEFINE_ERROR(ParameterOutOfRange);
ARR_DEFINE_ERROR(UnsupportedField);
ARR_DEFINE_ERROR(WrongField);
ARR_DEFINE_ERROR(NotApplicable);
ARR_DEFINE_ERROR(NotReal);
ARR_DEFINE_ERROR(EmptyPointSet);
ARR_DEFINE_ERROR(TrivialInput);
ARR_DEFINE_ERROR(NoZeroDiagonal);
ARR_DEFINE_ERROR(NotProjectivePlane);
ARR_DEFINE_ERROR(ChainFailure);
ARR_DEFINE_ERROR(SyntaxError);
ARR_DEFINE_ERROR(BadFieldElement);
ARR_DEFINE_ERROR(GeneratorMismatch);
ARR_DEFINE_ERROR(CheckFailure);

#undef ARR_DEFINE_ERROR

}  // namespace arr
