#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct InvalidStep : Error { using Error::Error; };
struct NotSmallStep : Error { using Error::Error; };
struct PredicateOutOfScope : Error { using Error::Error; };
struct DivisionByZeroPoly : Error { using Error::Error; };
struct DegenerateElimination : Error { using Error::Error; };
struct ZeroHessianTerm : Error { using Error::Error; };
struct HalfPlaneConfined : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NoMatchingRoot : Error { using Error::Error; };
struct AmbiguousRoot : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct PeriodMismatch : Error { using Error::Error; };
struct InsufficientTerms : Error { using Error::Error; };
struct NonPositiveTerm : Error { using Error::Error; };
struct UnmatchedFixture : Error { using Error::Error; };

}  // namespace qwalk
