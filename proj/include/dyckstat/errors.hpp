#pragma once

#include <stdexcept>
#include <string>

namespace dyck {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- path parsing ---
struct BadSymbol : Error { using Error::Error; };
struct NonBalanced : Error { using Error::Error; };
struct BelowAxis : Error { using Error::Error; };

// --- brute-force enumeration ---
struct ResourceBound : Error { using Error::Error; };

// --- series arithmetic ---
struct OrderMismatch : Error { using Error::Error; };
struct NonUnitConstantTerm : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };
struct TruncationUnsound : Error { using Error::Error; };
struct NonDivisibleByZ : Error { using Error::Error; };
struct DepthTooShallow : Error { using Error::Error; };
struct NonUnitDenominator : Error { using Error::Error; };

// --- generating-function catalog ---
struct UnknownGf : Error { using Error::Error; };
struct UnknownStatSpec : Error { using Error::Error; };
struct IntegralityViolation : Error { using Error::Error; };
struct NoOracle : Error { using Error::Error; };
struct BadBinding : Error { using Error::Error; };

struct IdentityFailed : Error {
    IdentityFailed(const std::string& name, int first_bad_power)
        : Error("identity '" + name + "' fails first at z^" + std::to_string(first_bad_power)),
          identity(name),
          power(first_bad_power) {}
    std::string identity;
    int power;
};

// --- bijections and polyominoes ---
struct NotInClass : Error { using Error::Error; };
struct PartBoundViolated : Error { using Error::Error; };
struct NotSymmetricPeak : Error { using Error::Error; };
struct WeightTooSmall : Error { using Error::Error; };
struct EmptyPath : Error { using Error::Error; };
struct MalformedPolyomino : Error { using Error::Error; };

// --- generic precondition violations ---
struct InvalidArgument : Error { using Error::Error; };

} // namespace dyck
