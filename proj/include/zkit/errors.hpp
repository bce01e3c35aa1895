#pragma once

#include <stdexcept>
#include <string>

namespace zkit {

// Domain errors carry a stable machine-readable kind; the CLI maps kind to
// its JSON error object.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& d) : Error("DimensionMismatch", d) {}
};

struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& d) : Error("UnsupportedDimension", d) {}
};

struct MixedRadicand : Error {
    explicit MixedRadicand(const std::string& d) : Error("MixedRadicand", d) {}
};

struct NegativeRadicand : Error {
    explicit NegativeRadicand(const std::string& d) : Error("NegativeRadicand", d) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& d) : Error("DivisionByZero", d) {}
};

struct LightlikeSeparation : Error {
    explicit LightlikeSeparation(const std::string& d) : Error("LightlikeSeparation", d) {}
};

struct EqualPoints : Error {
    explicit EqualPoints(const std::string& d) : Error("EqualPoints", d) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& d) : Error("InvalidArgument", d) {}
};

struct MembershipFailure : Error {
    explicit MembershipFailure(const std::string& d) : Error("MembershipFailure", d) {}
};

struct CertificateRequired : Error {
    explicit CertificateRequired(const std::string& d) : Error("CertificateRequired", d) {}
};

struct NotZeno : Error {
    explicit NotZeno(const std::string& d) : Error("NotZeno", d) {}
};

struct PointOnLoop : Error {
    explicit PointOnLoop(const std::string& d) : Error("PointOnLoop", d) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& d) : Error("SearchExhausted", d) {}
};

struct UnrepresentableRestriction : Error {
    explicit UnrepresentableRestriction(const std::string& d)
        : Error("UnrepresentableRestriction", d) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& d) : Error("ParseError", d) {}
};

}  // namespace zkit
