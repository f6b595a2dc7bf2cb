#pragma once

#include <stdexcept>
#include <string>

namespace rotlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotSquare : Error {
    explicit NotSquare(const std::string& msg) : Error(msg) {}
};
struct NotNormal : Error {
    explicit NotNormal(const std::string& msg) : Error(msg) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& msg) : Error(msg) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};
struct NotRational : Error {
    explicit NotRational(const std::string& msg) : Error(msg) {}
};
struct MissingExactData : Error {
    explicit MissingExactData(const std::string& msg) : Error(msg) {}
};
struct ParamViolation : Error {
    explicit ParamViolation(const std::string& msg) : Error(msg) {}
};

// spectral-gap hypotheses failing numerically
struct NoGap : Error {
    explicit NoGap(const std::string& msg) : Error(msg) {}
};
struct GapViolation : Error {
    explicit GapViolation(const std::string& msg) : Error(msg) {}
};
struct GapAtHalfViolation : Error {
    explicit GapAtHalfViolation(const std::string& msg) : Error(msg) {}
};
struct NoSpectralGap : Error {
    explicit NoSpectralGap(const std::string& msg) : Error(msg) {}
};
struct NormTooLarge : Error {
    explicit NormTooLarge(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace rotlab
