#pragma once

#include <vector>

#include "za/complex.hpp"

namespace za {

// Bivariate polynomial in (z, n) with Complex coefficients, dense storage:
// coeff(cz, cn) at index cz*(ndeg+1)+cn.
class BivarPoly {
  public:
    BivarPoly(int zdeg, int ndeg, Prec prec)
        : zdeg_(zdeg), ndeg_(ndeg),
          c_(static_cast<size_t>((zdeg + 1) * (ndeg + 1)), Complex::zero(prec)) {}
    static BivarPoly one(Prec prec) {
        BivarPoly p(0, 0, prec);
        p.at(0, 0) = Complex::one(prec);
        return p;
    }
    int zdeg() const { return zdeg_; }
    int ndeg() const { return ndeg_; }
    Complex& at(int cz, int cn) { return c_[static_cast<size_t>(cz * (ndeg_ + 1) + cn)]; }
    const Complex& at(int cz, int cn) const { return c_[static_cast<size_t>(cz * (ndeg_ + 1) + cn)]; }
    Prec prec() const { return c_[0].prec(); }

  private:
    int zdeg_, ndeg_;
    std::vector<Complex> c_;
};

enum class PoleVariant { plus, minus };  // (n z + i t) vs (n z - i t)

// Closed class of terms z^{alpha_offset + sigma_sign*sigma} * P(z,n) / (nz +- it)^k.
// sigma and t are numeric; sigma stays symbolic only in the z-exponent tag.
struct SigmaRational {
    int alpha_offset = 1;
    int sigma_sign = -1;  // exponent of z is alpha_offset + sigma_sign*sigma
    PoleVariant variant = PoleVariant::plus;
    int pole_power = 1;
    Real sigma;
    Real t;
    BivarPoly numerator;

    SigmaRational(Real sigma_, Real t_, PoleVariant v, Prec prec)
        : variant(v), sigma(std::move(sigma_)), t(std::move(t_)), numerator(BivarPoly::one(prec)) {
        check_prec(sigma, t);
        if (v == PoleVariant::minus) {
            // seed z^{sigma-1}/(n - it/z) = z^sigma/(nz - it)
            alpha_offset = 0;
            sigma_sign = 1;
        }
    }

    Prec prec() const { return sigma.prec(); }

    // Evaluate at a concrete z and integer n (principal branch for z^expnt).
    Complex eval(const Complex& z, long n) const;
};

// Applies (1/(n + it/z)) d/dz  (plus variant) or (1/(n - it/z)) d/dz (minus
// variant) to the term; pole_power increases by 2.
SigmaRational sigma_rational_derive(const SigmaRational& term);

// Convenience: the j-fold derived seed term.
SigmaRational operator_term(const Real& sigma, const Real& t, PoleVariant v, int j);

}  // namespace za
