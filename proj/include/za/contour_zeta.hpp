#pragma once

#include <utility>

#include "za/eval.hpp"
#include "za/quadrature.hpp"

namespace za {

struct ZetaExactResult {
    Complex zeta_s;
    Complex zeta_one_minus_s;
    Real err_estimate;
};

// Exact representation by two ray integrals; valid for any eta > 0 away from
// 2*pi*Z. phi1/phi2 are the outgoing ray angles in (-pi/2, pi/2).
ZetaExactResult zeta_exact(const Complex& s, const Real& eta, const Config& cfg,
                           double phi1 = 0.0, double phi2 = 0.0);
ZetaExactResult zeta_exact(const StripPoint& s, const Real& eta, const Config& cfg,
                           double phi1 = 0.0, double phi2 = 0.0);

// The two ray integrals with prefactors e^{+-i pi s/2}/(2 pi)^s.
std::pair<Complex, Complex> gl_gu(const Complex& s, const Real& eta, const Config& cfg,
                                  double phi1 = 0.0, double phi2 = 0.0);

struct BasicSumPair {
    Complex R;  // right semicircle integral, prefactored
    Complex L;  // left (hat) semicircle integral, prefactored
    Real err_estimate;
};

// R_eta^t and L_t^eta of the semicircle representations.
BasicSumPair basic_sum_semicircle(const StripPoint& s, const Real& eta, const Real& t_hi,
                                  const Config& cfg);

// principal value representation 2(2pi)^{-s} PV int_eta^t rho^{s-1}/(e^{i rho}-1) d rho
QuadratureResult basic_sum_pv(const StripPoint& s, const Real& eta, const Real& t_hi,
                              const Config& cfg);

// rotated-ray representation e^{-i eps s}(2pi)^{-s} int_eta^t u^{s-1}/(e^{iu e^{-i eps}}-1) du
QuadratureResult basic_sum_rotated(const StripPoint& s, const Real& eta, const Real& t_hi,
                                   double eps, const Config& cfg);

// sum_{n=a}^{b} n^{s-1} (empty when b < a)
Complex power_sum_s_minus_1(long a, long b, const Complex& s);
// sum_{n=a}^{b} n^{-s}
Complex power_sum_minus_s(long a, long b, const Complex& s);

}  // namespace za
