#pragma once

#include <stdexcept>
#include <string>

namespace za {

// Base for all domain errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PrecisionMismatch : Error {
    PrecisionMismatch(long a, long b)
        : Error("precision mismatch: " + std::to_string(a) + " vs " + std::to_string(b) + " bits") {}
};

struct DegenerateSeries : Error {
    explicit DegenerateSeries(const std::string& msg) : Error("degenerate series: " + msg) {}
};

struct InvalidOrder : Error {
    explicit InvalidOrder(const std::string& msg) : Error("invalid order: " + msg) {}
};

struct PoleAt : Error {
    explicit PoleAt(const std::string& where) : Error("pole at " + where) {}
};

struct OutOfAsymptoticRange : Error {
    explicit OutOfAsymptoticRange(const std::string& msg) : Error("out of asymptotic range: " + msg) {}
};

struct TooCloseToLatticePoint : Error {
    explicit TooCloseToLatticePoint(const std::string& msg) : Error("too close to 2*pi*Z: " + msg) {}
};

struct NearSingularU : Error {
    explicit NearSingularU(const std::string& msg) : Error("near-singular u: " + msg) {}
};

struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& msg) : Error("quadrature failure: " + msg) {}
};

struct RegimeViolation : Error {
    explicit RegimeViolation(const std::string& msg) : Error("regime violation: " + msg) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error("cap exceeded: " + msg) {}
};

}  // namespace za
