#pragma once

#include <stdexcept>
#include <string>

namespace sigtorus {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SIGTORUS_ERROR(Name)          \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

// laurent
SIGTORUS_ERROR(ZeroCoordinate);
SIGTORUS_ERROR(DenominatorVanishes);
SIGTORUS_ERROR(NotDivisible);

// hermitian
SIGTORUS_ERROR(NotHermitian);
SIGTORUS_ERROR(NonConvergence);
SIGTORUS_ERROR(SingularP);

// angles and link data
SIGTORUS_ERROR(InexactAngles);
SIGTORUS_ERROR(AngleParseError);
SIGTORUS_ERROR(BoundaryPoint);
SIGTORUS_ERROR(SchemaError);
SIGTORUS_ERROR(SymmetryViolation);
SIGTORUS_ERROR(DimensionMismatch);
SIGTORUS_ERROR(IoError);

// corrections
SIGTORUS_ERROR(DomainError);
SIGTORUS_ERROR(UnitOne);
SIGTORUS_ERROR(ZeroLinking);

// slope
SIGTORUS_ERROR(Indeterminate);
SIGTORUS_ERROR(PoleEncountered);
SIGTORUS_ERROR(NonRealSlope);
SIGTORUS_ERROR(MissingConwayData);

// verification
SIGTORUS_ERROR(MissingSublink);
SIGTORUS_ERROR(MissingUnderlying);
SIGTORUS_ERROR(WrongColorCount);
SIGTORUS_ERROR(UnsupportedCase);
SIGTORUS_ERROR(ZeroParameter);

#undef SIGTORUS_ERROR

}  // namespace sigtorus
