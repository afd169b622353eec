#pragma once

#include <stdexcept>
#include <string>

namespace kz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominatorError : Error { using Error::Error; };
struct InvalidIndexError : Error { using Error::Error; };
struct SingularMatrixError : Error { using Error::Error; };
struct SingularAtPointError : Error { using Error::Error; };
struct NotExpandableError : Error { using Error::Error; };
struct DegeneratePolesError : Error { using Error::Error; };
struct DegeneratePointError : Error { using Error::Error; };
struct DegenerateBasePointsError : Error { using Error::Error; };
struct ResonanceObstructionError : Error { using Error::Error; };
struct EigencheckFailedError : Error { using Error::Error; };
struct VerificationFailedError : Error { using Error::Error; };
struct BlockFormMismatchError : Error { using Error::Error; };
struct NotEigenvectorError : Error { using Error::Error; };
struct AsymptoticMismatchError : Error { using Error::Error; };
struct SingularCenterError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace kz
