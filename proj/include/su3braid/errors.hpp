#pragma once

#include <stdexcept>
#include <string>

namespace su3braid {

// Every failure raised by the library derives from Error so callers (the CLI,
// the verification driver) can catch a single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SU3BRAID_ERROR(Name)        \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

// cyclo
SU3BRAID_ERROR(DivisionByZero);
SU3BRAID_ERROR(OrderMismatch);
SU3BRAID_ERROR(NonDivisibleOrder);

// recoupling
SU3BRAID_ERROR(InvalidLevel);
SU3BRAID_ERROR(InadmissibleTriple);
SU3BRAID_ERROR(ZeroDenominator);

// braidrep
SU3BRAID_ERROR(EmptyBasis);
SU3BRAID_ERROR(NotUnitary);
SU3BRAID_ERROR(PhaseMismatch);
SU3BRAID_ERROR(UnsupportedSurd);

// matgroup
SU3BRAID_ERROR(GroupTooLarge);
SU3BRAID_ERROR(OrderExceedsCap);
SU3BRAID_ERROR(GeneratorNotInGroup);
SU3BRAID_ERROR(NotASubgroup);
SU3BRAID_ERROR(NotAbelian);
SU3BRAID_ERROR(DecompositionNotFound);
SU3BRAID_ERROR(NoFactorization);
SU3BRAID_ERROR(NonUniqueFactorization);
SU3BRAID_ERROR(IndexOutOfRange);
SU3BRAID_ERROR(UnboundName);
SU3BRAID_ERROR(WordSyntaxError);

// su3families
SU3BRAID_ERROR(InvalidParameters);

#undef SU3BRAID_ERROR

}  // namespace su3braid
