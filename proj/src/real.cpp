#include "za/real.hpp"

#include <cstdio>
#include <vector>

namespace za {

std::string Real::str(int digits) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
    int n = mpfr_snprintf(nullptr, 0, fmt, v_);
    std::vector<char> buf(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

Real abs(const Real& a) { Real r(a); mpfr_abs(r.raw(), r.raw(), MPFR_RNDN); return r; }
Real sqrt(const Real& a) { Real r(a); mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN); return r; }
Real exp(const Real& a) { Real r(a); mpfr_exp(r.raw(), r.raw(), MPFR_RNDN); return r; }
Real log(const Real& a) { Real r(a); mpfr_log(r.raw(), r.raw(), MPFR_RNDN); return r; }
Real log2(const Real& a) { Real r(a); mpfr_log2(r.raw(), r.raw(), MPFR_RNDN); return r; }
Real sin(const Real& a) { Real r(a); mpfr_sin(r.raw(), r.raw(), MPFR_RNDN); return r; }
Real cos(const Real& a) { Real r(a); mpfr_cos(r.raw(), r.raw(), MPFR_RNDN); return r; }

void sin_cos(Real& s, Real& c, const Real& a) {
    s = Real(a.prec());
    c = Real(a.prec());
    mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}

Real atan(const Real& a) { Real r(a); mpfr_atan(r.raw(), r.raw(), MPFR_RNDN); return r; }

Real atan2(const Real& y, const Real& x) {
    check_prec(y, x);
    Real r(y.prec());
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& expo) {
    check_prec(base, expo);
    Real r(base.prec());
    mpfr_pow(r.raw(), base.raw(), expo.raw(), MPFR_RNDN);
    return r;
}

Real pow_si(const Real& base, long e) {
    Real r(base.prec());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

Real floor(const Real& a) { Real r(a); mpfr_floor(r.raw(), r.raw()); return r; }
Real fmod(const Real& a, const Real& b) { check_prec(a, b); Real r(a); mpfr_fmod(r.raw(), r.raw(), b.raw(), MPFR_RNDN); return r; }
Real ldexp(Real a, long k) { mpfr_mul_2si(a.raw(), a.raw(), k, MPFR_RNDN); return a; }

Real dist_to_multiple(const Real& a, const Real& period) {
    Real m = fmod(abs(a), period);
    Real other = period - m;
    return m < other ? m : other;
}

long floor_long(const Real& a) {
    Real f = floor(a);
    return mpfr_get_si(f.raw(), MPFR_RNDZ);
}

}  // namespace za
