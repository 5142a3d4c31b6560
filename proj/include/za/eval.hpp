#pragma once

#include <string>
#include <vector>

#include "za/complex.hpp"

namespace za {

// Point s = sigma + it in the closed critical strip, t > 0.
struct StripPoint {
    Real sigma;
    Real t;

    StripPoint(Real sigma_, Real t_, bool strict = true)
        : sigma(std::move(sigma_)), t(std::move(t_)) {
        check_prec(sigma, t);
        if (strict) {
            if (sigma < 0L || sigma > 1L) throw RegimeViolation("sigma outside [0,1]");
            if (!(t > 0L)) throw RegimeViolation("t must be positive");
        }
    }
    static StripPoint of(double sigma, double t, Prec prec, bool strict = true) {
        return StripPoint(Real::of(sigma, prec), Real::of(t, prec), strict);
    }

    Prec prec() const { return sigma.prec(); }
    Complex s() const { return Complex(sigma, t); }
    Complex one_minus_s() const { return Complex(1L - sigma, -t); }
};

// Value plus a predicted error magnitude and a labeled term breakdown.
// The value is exactly the sum of the terms at working precision.
struct EvalResult {
    Complex value;
    Real predicted_error_mag;
    std::vector<std::pair<std::string, Complex>> terms;

    explicit EvalResult(Prec prec)
        : value(Complex::zero(prec)), predicted_error_mag(Real::of(0L, prec)) {}

    void add_term(const std::string& label, const Complex& term) {
        terms.emplace_back(label, term);
        value += term;
    }
};

// Shared evaluation knobs. delta_guard is the minimum allowed distance of eta
// or t from 2*pi*Z; A_const is the constant in regime conditions of the form
// 1 <= N < A*t; tol is the absolute quadrature tolerance.
struct Config {
    Prec prec = 256;
    double delta_guard = 1e-3;
    double A_const = 1.0 / 30.0;
    double tol = 1e-40;
    bool strict_regimes = true;

    Real tol_real() const { return Real::of(tol, prec); }
    Real delta_real() const { return Real::of(delta_guard, prec); }
};

// throws TooCloseToLatticePoint unless dist(x, 2*pi*Z) > delta
void require_lattice_distance(const Real& x, double delta, const std::string& what);

}  // namespace za
