#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "za/errors.hpp"

namespace za {

using Prec = mpfr_prec_t;

// Arbitrary-precision real number. Every value carries its mantissa width;
// arithmetic between operands of different precision throws PrecisionMismatch
// rather than coercing silently.
class Real {
  public:
    explicit Real(Prec prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long n, Prec prec) { Real r(prec); mpfr_set_si(r.v_, n, MPFR_RNDN); return r; }
    static Real of(int n, Prec prec) { return of(static_cast<long>(n), prec); }
    static Real of(double d, Prec prec) { Real r(prec); mpfr_set_d(r.v_, d, MPFR_RNDN); return r; }
    static Real parse(const std::string& s, Prec prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw Error("unparsable real: " + s);
        return r;
    }
    static Real ratio(long num, long den, Prec prec) {
        Real r = of(num, prec);
        mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
        return r;
    }
    static Real pi(Prec prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real two_pi(Prec prec) { Real r = pi(prec); mpfr_mul_2si(r.v_, r.v_, 1, MPFR_RNDN); return r; }

    Prec prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // 'digits' significant decimal digits, shortest-ish form.
    std::string str(int digits = 20) const;

    friend void check_prec(const Real& a, const Real& b) {
        if (a.prec() != b.prec()) throw PrecisionMismatch(a.prec(), b.prec());
    }

    Real operator-() const { Real r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { check_prec(*this, o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { check_prec(*this, o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { check_prec(*this, o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { check_prec(*this, o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

    friend Real operator+(Real a, const Real& b) { a += b; return a; }
    friend Real operator-(Real a, const Real& b) { a -= b; return a; }
    friend Real operator*(Real a, const Real& b) { a *= b; return a; }
    friend Real operator/(Real a, const Real& b) { a /= b; return a; }

    friend Real operator+(Real a, long b) { mpfr_add_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
    friend Real operator-(Real a, long b) { mpfr_sub_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
    friend Real operator*(Real a, long b) { mpfr_mul_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
    friend Real operator/(Real a, long b) { mpfr_div_si(a.v_, a.v_, b, MPFR_RNDN); return a; }
    friend Real operator+(long a, Real b) { mpfr_add_si(b.v_, b.v_, a, MPFR_RNDN); return b; }
    friend Real operator-(long a, const Real& b) { Real r(b.prec()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(long a, Real b) { mpfr_mul_si(b.v_, b.v_, a, MPFR_RNDN); return b; }
    friend Real operator/(long a, const Real& b) { Real r(b.prec()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }

    int cmp(const Real& o) const { check_prec(*this, o); return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return a.cmp(b) == 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  private:
    mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real log2(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
void sin_cos(Real& s, Real& c, const Real& a);
Real atan(const Real& a);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& base, const Real& expo);
Real pow_si(const Real& base, long e);
Real floor(const Real& a);
Real fmod(const Real& a, const Real& b);
// a * 2^k, exact.
Real ldexp(Real a, long k);
// distance of a to the nearest multiple of period
Real dist_to_multiple(const Real& a, const Real& period);
long floor_long(const Real& a);

}  // namespace za
