#pragma once

#include "za/complex.hpp"
#include "za/eval.hpp"

namespace za {

// Gamma(s) for complex s, relative error < 2^{-(P-16)}. Throws PoleAt on
// nonpositive integers.
Complex gamma_fn(const Complex& s);

// log Gamma(s) for Re(s) >= 1/2 (principal-ish; continuous along the Stirling
// shift path, exact enough for ratios and magnitudes used here).
Complex log_gamma_right(const Complex& s);

// chi(s) = (2*pi)^s / pi * sin(pi s / 2) * Gamma(1-s)
Complex chi(const Complex& s);

enum class ChiOrder { leading, with_1_over_t };

struct ChiAsymptotic {
    Complex value;
    ChiOrder order;
};

// Two-term large-t asymptotic forms; require t >= 10.
// chi(s) ~ (2*pi)^{s-1/2} t^{1/2-s} e^{i pi/4} e^{it} [1 - i c(sigma)/t],
// Gamma(1-s) ~ sqrt(2*pi) t^{1/2-s} e^{-i pi (1-s)/2} e^{i pi/4} e^{it} [1 - i c(sigma)/t],
// with c(sigma) = sigma(1-sigma)/2 - 1/12.
ChiAsymptotic chi_asymptotic(const StripPoint& s, ChiOrder order = ChiOrder::with_1_over_t);
Complex gamma1ms_asymptotic(const StripPoint& s, ChiOrder order = ChiOrder::with_1_over_t);
Real c_sigma(const Real& sigma);

// Li_m(e^{i eta}) for m >= 1, eta real with dist(eta, 2*pi*Z) > delta.
Complex polylog_unit(int m, const Real& eta, double delta = 1e-3);

// zeta at an integer argument m >= 2, cached per precision.
Real zeta_int(int m, Prec prec);

// Direct defining series partial sum (test oracle); tail bounded by
// 1/((m-1) K^{m-1}).
Complex polylog_unit_partial(int m, const Real& eta, long K);

}  // namespace za
