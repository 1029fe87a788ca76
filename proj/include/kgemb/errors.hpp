#pragma once

#include <stdexcept>
#include <string>

namespace kgemb {

// Base type for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// term / graph
struct InvalidLanguage : Error { using Error::Error; };
struct EmptyAfterNormalization : Error { using Error::Error; };
struct MalformedUri : Error { using Error::Error; };
struct UnknownRelation : Error { using Error::Error; };
struct UnknownNode : Error { using Error::Error; };

// file ingestion; carries a 1-based line number when one is known
struct ParseError : Error {
    explicit ParseError(const std::string& what, long line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line(line) {}
    long line;
};

// linear algebra
struct RankTooLarge : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// pipeline stages
struct EmptyGraph : Error { using Error::Error; };
struct EmptyIntersection : Error { using Error::Error; };

// evaluation statistics
struct LengthMismatch : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct TooFewSamples : Error { using Error::Error; };
struct UnknownSplit : Error { using Error::Error; };

struct IoError : Error { using Error::Error; };

}  // namespace kgemb
