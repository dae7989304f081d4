#pragma once

#include <stdexcept>
#include <string>

namespace triality {

class TrialityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TRIALITY_DEFINE_ERROR(Name)                                   \
    class Name : public TrialityError {                               \
    public:                                                           \
        explicit Name(const std::string& what) : TrialityError(what) {} \
    };

TRIALITY_DEFINE_ERROR(NotSignedMonomial)
TRIALITY_DEFINE_ERROR(NotInWD4)
TRIALITY_DEFINE_ERROR(CarrierTooSmall)
TRIALITY_DEFINE_ERROR(NotOrientable)
TRIALITY_DEFINE_ERROR(OddDegreeBase)
TRIALITY_DEFINE_ERROR(InvalidCovering)
TRIALITY_DEFINE_ERROR(FingerprintMismatch)
TRIALITY_DEFINE_ERROR(NotSeparable)
TRIALITY_DEFINE_ERROR(ZeroConstant)
TRIALITY_DEFINE_ERROR(RootFindingFailure)
TRIALITY_DEFINE_ERROR(ParseError)

#undef TRIALITY_DEFINE_ERROR

}  // namespace triality
