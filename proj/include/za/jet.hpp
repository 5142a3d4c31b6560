#pragma once

#include <vector>

#include "za/complex.hpp"

namespace za {

// Truncated Taylor series; coeffs[k] is the k-th Taylor coefficient. All
// coefficients share one working precision. Ring and composition operations
// truncate at the shorter operand's order.
class Jet {
  public:
    Jet(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw InvalidOrder("jet needs at least one coefficient");
        for (const auto& x : c_) check_prec(x.re(), c_[0].re());
    }
    static Jet constant(const Complex& value, int order) {
        std::vector<Complex> c(static_cast<size_t>(order), Complex::zero(value.prec()));
        c.at(0) = value;
        return Jet(std::move(c));
    }
    // the identity series z, truncated at `order`
    static Jet variable(int order, Prec prec) {
        if (order < 1) throw InvalidOrder("order < 1");
        std::vector<Complex> c(static_cast<size_t>(order), Complex::zero(prec));
        if (order > 1) c[1] = Complex::one(prec);
        return Jet(std::move(c));
    }

    int order() const { return static_cast<int>(c_.size()); }
    Prec prec() const { return c_[0].prec(); }
    const Complex& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    Complex& operator[](int k) { return c_[static_cast<size_t>(k)]; }
    const std::vector<Complex>& coeffs() const { return c_; }

    Jet truncated(int order) const;
    // k-th derivative value at the expansion point: k! * coeffs[k]
    Complex derivative_value(int k) const;

    Jet operator-() const;
    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator*(const Jet& a, const Complex& s);
    friend Jet operator*(const Complex& s, const Jet& a) { return a * s; }

    Complex eval(const Complex& z) const;

  private:
    std::vector<Complex> c_;
};

// reciprocal; requires nonzero constant term
Jet reciprocal(const Jet& a);
// d/dz, order shrinks by one (minimum 1)
Jet derive(const Jet& a);
Jet exp(const Jet& a);
// requires constant term != 0; principal log of the constant term
Jet log(const Jet& a);
// a^e = exp(e*log(a))
Jet pow(const Jet& a, const Complex& e);
Jet sqrt(const Jet& a);
// g(f(z)); f must have zero constant term
Jet compose(const Jet& g, const Jet& f);

// Compositional inverse. The input series v must have zero constant term; if
// its first nonzero coefficient sits at index r (the ramification order), the
// inverse is returned as a series rho(lambda) in the local parameter
// lambda = v^{1/r}, satisfying v(rho(lambda)) = lambda^r. The result carries
// `order` coefficients. Verified internally by round-trip composition.
Jet jet_reversion(const Jet& v, int order);

}  // namespace za
