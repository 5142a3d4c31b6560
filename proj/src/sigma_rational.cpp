#include "za/sigma_rational.hpp"

namespace za {

Complex SigmaRational::eval(const Complex& z, long n) const {
    Prec p = prec();
    Complex expnt = Complex::from_real(Real::of(alpha_offset, p) + Real::of(sigma_sign, p) * sigma);
    Complex zpow = pow(z, expnt);
    // Horner in z, inner Horner in n
    Complex acc = Complex::zero(p);
    for (int cz = numerator.zdeg(); cz >= 0; --cz) {
        Complex row = Complex::zero(p);
        for (int cn = numerator.ndeg(); cn >= 0; --cn) row = row * static_cast<long>(n) + numerator.at(cz, cn);
        acc = acc * z + row;
    }
    Complex it = Complex(Real::of(0L, p), variant == PoleVariant::plus ? t : -t);
    Complex den = pow_si(z * static_cast<long>(n) + it, pole_power);
    return zpow * acc / den;
}

SigmaRational sigma_rational_derive(const SigmaRational& term) {
    const Prec p = term.prec();
    const BivarPoly& P = term.numerator;
    const int zd = P.zdeg(), nd = P.ndeg();
    // exponent of z is e = alpha_offset + sigma_sign*sigma
    Real e = Real::of(term.alpha_offset, p) + Real::of(term.sigma_sign, p) * term.sigma;
    // A = e*P + z*dP/dz ; then Q = A*(n z +- i t) - k*n*z*P  over (nz +- it)^{k+2}
    BivarPoly A(zd, nd, p);
    for (int cz = 0; cz <= zd; ++cz)
        for (int cn = 0; cn <= nd; ++cn)
            A.at(cz, cn) = P.at(cz, cn) * (e + static_cast<long>(cz));

    Complex it = Complex(Real::of(0L, p),
                         term.variant == PoleVariant::plus ? term.t : -term.t);
    BivarPoly Q(zd + 1, nd + 1, p);
    for (int cz = 0; cz <= zd; ++cz) {
        for (int cn = 0; cn <= nd; ++cn) {
            Q.at(cz + 1, cn + 1) += A.at(cz, cn);          // * n z
            Q.at(cz, cn) += A.at(cz, cn) * it;             // * (+- i t)
            Q.at(cz + 1, cn + 1) -= P.at(cz, cn) * static_cast<long>(term.pole_power);  // - k n z P
        }
    }
    SigmaRational out = term;
    out.numerator = std::move(Q);
    out.pole_power += 2;
    return out;
}

SigmaRational operator_term(const Real& sigma, const Real& t, PoleVariant v, int j) {
    SigmaRational term(sigma, t, v, sigma.prec());
    for (int i = 0; i < j; ++i) term = sigma_rational_derive(term);
    return term;
}

}  // namespace za
