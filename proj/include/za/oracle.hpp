#pragma once

#include "za/complex.hpp"
#include "za/eval.hpp"

namespace za {

// Reference zeta via Euler-Maclaurin with a certified remainder bound.
// |result - zeta(s)| < 10^{-digits}. Throws PoleAt for s = 1 and Error if the
// requested accuracy exceeds the working-precision budget.
Complex zeta_reference(const Complex& s, int digits);

// Same value with the certified remainder estimate exposed.
struct ZetaEmResult {
    Complex value;
    Real remainder_bound;
};
ZetaEmResult zeta_euler_maclaurin(const Complex& s, int digits);

// Memoized front-end used by the table harness (process-wide cache).
Complex zeta_reference_cached(const Complex& s, int digits);

// Classical truncated Dirichlet series: sum_{n<=x} n^{-s} - x^{1-s}/(1-s),
// predicted error x^{-sigma}. Requires 2*pi*x > |t| and sigma > 0.
EvalResult zeta_truncated_dirichlet(const StripPoint& s, const Real& x, Prec prec);

}  // namespace za
