#ifndef MODCONG_ERRORS_HPP
#define MODCONG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modcong {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidPrecision : Error {
    explicit InvalidPrecision(const std::string& msg = "precision must be positive") : Error(msg) {}
};

struct ModulusMismatch : Error {
    explicit ModulusMismatch(const std::string& msg = "incompatible moduli") : Error(msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg = "leading coefficient is not a unit") : Error(msg) {}
};

struct BadLeadingTerm : Error {
    explicit BadLeadingTerm(const std::string& msg = "constant term must be 1") : Error(msg) {}
};

struct NotIntegralSqrt : Error {
    explicit NotIntegralSqrt(const std::string& msg = "square root is not integral") : Error(msg) {}
};

struct CompositionDiverges : Error {
    explicit CompositionDiverges(const std::string& msg = "inner series must have valuation >= 1") : Error(msg) {}
};

struct NotRevertible : Error {
    explicit NotRevertible(const std::string& msg = "series is not revertible") : Error(msg) {}
};

struct PrecisionExceeded : Error {
    explicit PrecisionExceeded(const std::string& msg = "index beyond available precision") : Error(msg) {}
};

struct NotExpandable : Error {
    explicit NotExpandable(const std::string& msg = "eta quotient has no integral q-expansion") : Error(msg) {}
};

struct UnknownForm : Error {
    explicit UnknownForm(const std::string& msg = "unknown form name") : Error(msg) {}
};

struct UnsupportedWeight : Error {
    explicit UnsupportedWeight(const std::string& msg = "weight must be odd") : Error(msg) {}
};

struct BadParameter : Error {
    explicit BadParameter(const std::string& msg = "bad parameter") : Error(msg) {}
};

struct NoRepresentation : Error {
    explicit NoRepresentation(const std::string& msg = "no two-square representation") : Error(msg) {}
};

} // namespace modcong

#endif
