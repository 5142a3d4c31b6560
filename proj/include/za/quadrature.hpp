#pragma once

#include <functional>

#include "za/complex.hpp"

namespace za {

using Integrand = std::function<Complex(const Complex&)>;

struct QuadratureResult {
    Complex value;
    Real error_estimate;
};

struct QuadratureOptions {
    double tol = 1e-40;       // absolute tolerance on the integral
    int max_depth = 52;       // adaptive bisection depth per panel
    int points = 24;          // Gauss-Legendre nodes per panel
    double min_length = 0.0;  // rays: keep integrating at least this far
    int max_panels = 4000;    // rays: hard cap on outward panels
    int min_depth = 2;        // forced bisection depth (guards against aliasing)
};

// Ray from `start` toward infinity in direction angle phi in (-pi/2, pi/2);
// integration is truncated once the running tail drops below tol and the
// analytic tail estimate is added to the error.
struct RayPath {
    Complex start;
    Real direction_angle;
    Real truncation_radius;  // filled in by the integrator
};

// Semicircle from i*low to i*high (right: Re z >= 0) or back (left).
struct SemicirclePath {
    Real low;
    Real high;
    enum class Side { right, left } side;
};

// straight segment [a, b]
QuadratureResult integrate_segment(const Integrand& f, const Complex& a, const Complex& b,
                                   const QuadratureOptions& opt);

// circular arc z = center + radius*e^{i theta}, theta from th0 to th1
QuadratureResult integrate_arc(const Integrand& f, const Complex& center, const Real& radius,
                               const Real& th0, const Real& th1, const QuadratureOptions& opt);

// ray to infinity; returns the path with truncation_radius set
QuadratureResult integrate_ray(const Integrand& f, RayPath& path, const QuadratureOptions& opt);

QuadratureResult integrate_semicircle(const Integrand& f, const SemicirclePath& path, Prec prec,
                                      const QuadratureOptions& opt);

}  // namespace za
