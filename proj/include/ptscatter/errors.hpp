#pragma once

#include <stdexcept>
#include <string>

namespace ptscatter {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define PTSCATTER_DEFINE_ERROR(Name)              \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    }

PTSCATTER_DEFINE_ERROR(InvalidParameter);
// The two solutions used to build the coefficients are linearly dependent.
PTSCATTER_DEFINE_ERROR(DegenerateSolutions);
// M_RR vanishes: a pole of T (spectral singularity).
PTSCATTER_DEFINE_ERROR(TransmissionPole);
PTSCATTER_DEFINE_ERROR(ZeroTransmission);
PTSCATTER_DEFINE_ERROR(GammaPole);
PTSCATTER_DEFINE_ERROR(NumeratorPole);
PTSCATTER_DEFINE_ERROR(InvalidNu);
PTSCATTER_DEFINE_ERROR(TransferOverflow);
PTSCATTER_DEFINE_ERROR(StepTooLarge);
PTSCATTER_DEFINE_ERROR(NonDecayedPotential);
PTSCATTER_DEFINE_ERROR(QuadratureFailure);
PTSCATTER_DEFINE_ERROR(ResonancePole);
PTSCATTER_DEFINE_ERROR(AsymmetricGrid);
PTSCATTER_DEFINE_ERROR(VacuousForReflectionless);

#undef PTSCATTER_DEFINE_ERROR

}  // namespace ptscatter
