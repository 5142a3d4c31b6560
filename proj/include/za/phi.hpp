#pragma once

#include <optional>

#include "za/eval.hpp"
#include "za/jet.hpp"
#include "za/quadrature.hpp"

namespace za {

// Argument pair for Phi(tau, u); tau < 0, optionally exactly -p/q.
struct PhiArg {
    Real tau;
    Complex u;
    struct Rational {
        long p;
        long q;
    };
    std::optional<Rational> rational;

    PhiArg(Real tau_, Complex u_) : tau(std::move(tau_)), u(std::move(u_)) {
        if (!(tau < 0L)) throw RegimeViolation("tau must be negative");
    }
    static PhiArg of_rational(long p, long q, Complex u_, Prec prec) {
        if (p <= 0 || q <= 0) throw RegimeViolation("p, q must be positive");
        PhiArg a(Real::ratio(-p, q, prec), std::move(u_));
        a.rational = Rational{p, q};
        return a;
    }
};

// Contour integral along x = crossing + r e^{3 pi i/4}, r in (-inf, inf).
Complex phi_quadrature(const PhiArg& arg, double crossing, const Config& cfg);

// Finite closed form for tau = -p/q. Throws NearSingularU when the
// denominator is within 10^{-P/4} of zero.
Complex phi_rational(long p, long q, const Complex& u);

// Taylor coefficients of u -> Phi(tau, u) at arg.u up to `order` terms
// (coeff[k] = d^k Phi / k!). Uses the closed form when tau is rational,
// otherwise differentiated quadrature.
Jet phi_jet(const PhiArg& arg, int order, const Config& cfg);
Jet phi_jet_quadrature(const PhiArg& arg, int order, double crossing, const Config& cfg);

// Siegel's normalization: Psi(a) = cos(pi(a^2/2 - a - 1/8))/cos(pi a),
// related to Phi by Psi(a) = -i Phi(-1, a - 1/2) e^{-i pi (a^2/2 - 5/8)}.
Complex siegel_psi(const Complex& a);
// Phi(-1, u) recovered from Psi (cross-check route)
Complex phi_from_siegel_psi(const Complex& u);
Jet phi_jet_from_siegel_psi(const Complex& u, int order);

}  // namespace za
