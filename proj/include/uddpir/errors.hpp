#ifndef UDDPIR_ERRORS_HPP
#define UDDPIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uddpir {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct MissingModulus : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct DemandNotSorted : Error { using Error::Error; };
struct InfeasibleAssignment : Error { using Error::Error; };
struct BoundBelowFloor : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace uddpir

#endif
