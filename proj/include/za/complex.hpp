#pragma once

#include "za/real.hpp"

namespace za {

// Which half-line the logarithm is cut along. negative_real is the principal
// branch, arg in (-pi, pi]; positive_real puts arg in [0, 2*pi).
enum class BranchCut { negative_real, positive_real };

class Complex {
  public:
    explicit Complex(Prec prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
        check_prec(re_, im_);
    }

    static Complex of(long re, long im, Prec prec) {
        return Complex(Real::of(re, prec), Real::of(im, prec));
    }
    static Complex of(double re, double im, Prec prec) {
        return Complex(Real::of(re, prec), Real::of(im, prec));
    }
    static Complex zero(Prec prec) { return of(0L, 0L, prec); }
    static Complex one(Prec prec) { return of(1L, 0L, prec); }
    static Complex i(Prec prec) { return of(0L, 1L, prec); }
    static Complex from_real(Real re) {
        Real im(re.prec());
        mpfr_set_zero(im.raw(), 1);
        return Complex(std::move(re), std::move(im));
    }

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Prec prec() const { return re_.prec(); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_nan() const { return re_.is_nan() || im_.is_nan(); }

    std::string str(int digits = 20) const {
        return "(" + re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + abs(im_).str(digits) + "i)";
    }

    Complex operator-() const { return Complex(-re_, -im_); }

    Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
    Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }
    Complex& operator+=(const Real& r) { re_ += r; return *this; }
    Complex& operator-=(const Real& r) { re_ -= r; return *this; }
    Complex& operator*=(const Real& r) { re_ *= r; im_ *= r; return *this; }
    Complex& operator/=(const Real& r) { re_ /= r; im_ /= r; return *this; }

    friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
    friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        check_prec(a.re_, b.re_);
        return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        check_prec(a.re_, b.re_);
        Real d = b.re_ * b.re_ + b.im_ * b.im_;
        return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
    }

    friend Complex operator+(Complex a, const Real& b) { a.re_ += b; return a; }
    friend Complex operator-(Complex a, const Real& b) { a.re_ -= b; return a; }
    friend Complex operator*(const Complex& a, const Real& b) { return Complex(a.re_ * b, a.im_ * b); }
    friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
    friend Complex operator/(const Complex& a, const Real& b) { return Complex(a.re_ / b, a.im_ / b); }
    friend Complex operator+(Complex a, long b) { a.re_ = a.re_ + b; return a; }
    friend Complex operator-(Complex a, long b) { a.re_ = a.re_ - b; return a; }
    friend Complex operator*(const Complex& a, long b) { return Complex(a.re_ * b, a.im_ * b); }
    friend Complex operator/(const Complex& a, long b) { return Complex(a.re_ / b, a.im_ / b); }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    Real re_, im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real abs2(const Complex& z);
Real arg(const Complex& z, BranchCut cut = BranchCut::negative_real);
Complex exp(const Complex& z);
Complex log(const Complex& z, BranchCut cut = BranchCut::negative_real);
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
// base^expo = exp(expo * log(base, cut))
Complex pow(const Complex& base, const Complex& expo, BranchCut cut = BranchCut::negative_real);
Complex pow(const Complex& base, const Real& expo, BranchCut cut = BranchCut::negative_real);
// positive real base, complex exponent (no branch ambiguity)
Complex pow(const Real& base, const Complex& expo);
Complex pow_si(const Complex& base, long e);
// e^{i*theta}
Complex cis(const Real& theta);
// i^k for integer k
Complex i_pow(long k, Prec prec);
// n^expo for integer n >= 1
Complex n_power(long n, const Complex& expo);

}  // namespace za
