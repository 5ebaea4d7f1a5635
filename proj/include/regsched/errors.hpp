#pragma once

#include <stdexcept>
#include <string>

namespace regsched {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define REGSCHED_DEFINE_ERROR(Name)       \
  struct Name : Error {                   \
    using Error::Error;                   \
  }

REGSCHED_DEFINE_ERROR(NonPositiveWeight);
REGSCHED_DEFINE_ERROR(InvalidInterval);
REGSCHED_DEFINE_ERROR(DuplicateJobId);
REGSCHED_DEFINE_ERROR(EmptyInstance);
REGSCHED_DEFINE_ERROR(MismatchedInstance);
REGSCHED_DEFINE_ERROR(TooLarge);
REGSCHED_DEFINE_ERROR(UnnormalizedInstance);
REGSCHED_DEFINE_ERROR(FractionalSolution);
REGSCHED_DEFINE_ERROR(NumericalFailure);
REGSCHED_DEFINE_ERROR(NonUnitWeights);
REGSCHED_DEFINE_ERROR(InvalidWarmStart);
REGSCHED_DEFINE_ERROR(InvalidBlockCount);
REGSCHED_DEFINE_ERROR(MethodUnavailable);
REGSCHED_DEFINE_ERROR(InvalidSize);

#undef REGSCHED_DEFINE_ERROR

}  // namespace regsched
