#pragma once

#include <stdexcept>
#include <string>

namespace hkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HKIT_DEFINE_ERROR(Name)                 \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

HKIT_DEFINE_ERROR(SingularPoint);
HKIT_DEFINE_ERROR(ChartMismatch);
HKIT_DEFINE_ERROR(BadDimension);
HKIT_DEFINE_ERROR(UndefinedAngle);
HKIT_DEFINE_ERROR(ZeroRadius);
HKIT_DEFINE_ERROR(SingularAxis);
HKIT_DEFINE_ERROR(SingularMetric);
HKIT_DEFINE_ERROR(RelationFailed);
HKIT_DEFINE_ERROR(TermBudgetExceeded);
HKIT_DEFINE_ERROR(OrderingViolation);
HKIT_DEFINE_ERROR(InvalidQuantumNumbers);
HKIT_DEFINE_ERROR(GridTooCoarse);
HKIT_DEFINE_ERROR(InterpolationFailure);
HKIT_DEFINE_ERROR(ConfigError);

#undef HKIT_DEFINE_ERROR

}  // namespace hkit
