#pragma once

#include <stdexcept>
#include <string>

namespace hulthen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HULTHEN_DEFINE_ERROR(Name)     \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  };

HULTHEN_DEFINE_ERROR(DomainError)
HULTHEN_DEFINE_ERROR(InvalidParams)
HULTHEN_DEFINE_ERROR(NotBound)
HULTHEN_DEFINE_ERROR(OutOfRange)
HULTHEN_DEFINE_ERROR(NoClassicalRegion)
HULTHEN_DEFINE_ERROR(CentrifugalFree)
HULTHEN_DEFINE_ERROR(QuadratureFailure)
HULTHEN_DEFINE_ERROR(NoRoot)
HULTHEN_DEFINE_ERROR(InvalidC)
HULTHEN_DEFINE_ERROR(ParameterPole)
HULTHEN_DEFINE_ERROR(GridTooCoarse)
HULTHEN_DEFINE_ERROR(NodeProximity)
HULTHEN_DEFINE_ERROR(ConvergenceFailure)
HULTHEN_DEFINE_ERROR(NoBoundState)

#undef HULTHEN_DEFINE_ERROR

}  // namespace hulthen
