#pragma once

#include <stdexcept>
#include <string>

namespace phasecat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotSymplectic : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct SingularCayley : Error { using Error::Error; };
struct DegenerateOverlap : Error { using Error::Error; };
struct ImaginaryResidueExceeded : Error { using Error::Error; };
struct TruncationInsufficient : Error { using Error::Error; };
struct NyquistViolation : Error { using Error::Error; };
struct DeconvolutionIllPosed : Error { using Error::Error; };
struct VanishingNorm : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace phasecat
