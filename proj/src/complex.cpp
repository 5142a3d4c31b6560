#include "za/complex.hpp"

namespace za {

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.raw(), z.re().raw(), z.im().raw(), MPFR_RNDN);
    return r;
}

Real abs2(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real arg(const Complex& z, BranchCut cut) {
    Real a = atan2(z.im(), z.re());
    if (cut == BranchCut::positive_real && a.sign() < 0) a += Real::two_pi(z.prec());
    return a;
}

Complex exp(const Complex& z) {
    Real m = exp(z.re());
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.im());
    return Complex(m * c, m * s);
}

Complex log(const Complex& z, BranchCut cut) {
    return Complex(log(abs(z)), arg(z, cut));
}

Complex sqrt(const Complex& z) {
    // principal branch
    if (z.im().is_zero() && z.re().sign() >= 0) return Complex(sqrt(z.re()), Real::of(0L, z.prec()));
    Real r = abs(z);
    Real u = sqrt(ldexp(r + z.re(), -1));
    Real v = sqrt(ldexp(r - z.re(), -1));
    if (z.im().sign() < 0) v = -v;
    return Complex(std::move(u), std::move(v));
}

Complex sin(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.re());
    Real ch(z.prec()), sh(z.prec());
    mpfr_cosh(ch.raw(), z.im().raw(), MPFR_RNDN);
    mpfr_sinh(sh.raw(), z.im().raw(), MPFR_RNDN);
    return Complex(s * ch, c * sh);
}

Complex cos(const Complex& z) {
    Real s(z.prec()), c(z.prec());
    sin_cos(s, c, z.re());
    Real ch(z.prec()), sh(z.prec());
    mpfr_cosh(ch.raw(), z.im().raw(), MPFR_RNDN);
    mpfr_sinh(sh.raw(), z.im().raw(), MPFR_RNDN);
    return Complex(c * ch, -(s * sh));
}

Complex pow(const Complex& base, const Complex& expo, BranchCut cut) {
    return exp(expo * log(base, cut));
}

Complex pow(const Complex& base, const Real& expo, BranchCut cut) {
    return exp(log(base, cut) * expo);
}

Complex pow(const Real& base, const Complex& expo) {
    return exp(expo * log(base));
}

Complex pow_si(const Complex& base, long e) {
    Prec p = base.prec();
    if (e == 0) return Complex::one(p);
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Complex acc = Complex::one(p);
    Complex b = base;
    while (n) {
        if (n & 1UL) acc *= b;
        n >>= 1;
        if (n) b *= b;
    }
    if (inv) acc = Complex::one(p) / acc;
    return acc;
}

Complex cis(const Real& theta) {
    Real s(theta.prec()), c(theta.prec());
    sin_cos(s, c, theta);
    return Complex(std::move(c), std::move(s));
}

Complex n_power(long n, const Complex& expo) {
    Prec p = expo.prec();
    if (n == 1) return Complex::one(p);
    Real ln = log(Real::of(n, p));
    Real mag = exp(expo.re() * ln);
    Real s(p), c(p);
    sin_cos(s, c, expo.im() * ln);
    return Complex(mag * c, mag * s);
}

Complex i_pow(long k, Prec prec) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Complex::of(1L, 0L, prec);
        case 1: return Complex::of(0L, 1L, prec);
        case 2: return Complex::of(-1L, 0L, prec);
        default: return Complex::of(0L, -1L, prec);
    }
}

}  // namespace za
