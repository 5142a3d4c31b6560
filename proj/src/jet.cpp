#include "za/jet.hpp"

#include <algorithm>

namespace za {

namespace {
int min_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }
}  // namespace

Jet Jet::truncated(int order) const {
    if (order < 1) throw InvalidOrder("order < 1");
    std::vector<Complex> c;
    c.reserve(static_cast<size_t>(order));
    for (int k = 0; k < order; ++k)
        c.push_back(k < this->order() ? c_[static_cast<size_t>(k)] : Complex::zero(prec()));
    return Jet(std::move(c));
}

Complex Jet::derivative_value(int k) const {
    Complex v = c_[static_cast<size_t>(k)];
    Real f = Real::of(1L, prec());
    for (int j = 2; j <= k; ++j) f *= j;
    return v * f;
}

Jet Jet::operator-() const {
    std::vector<Complex> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return Jet(std::move(c));
}

Jet operator+(const Jet& a, const Jet& b) {
    int n = min_order(a, b);
    std::vector<Complex> c;
    c.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) c.push_back(a[k] + b[k]);
    return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b) {
    int n = min_order(a, b);
    std::vector<Complex> c;
    c.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) c.push_back(a[k] - b[k]);
    return Jet(std::move(c));
}

Jet operator*(const Jet& a, const Jet& b) {
    int n = min_order(a, b);
    std::vector<Complex> c(static_cast<size_t>(n), Complex::zero(a.prec()));
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < n; ++j) c[static_cast<size_t>(i + j)] += a[i] * b[j];
    }
    return Jet(std::move(c));
}

Jet operator*(const Jet& a, const Complex& s) {
    std::vector<Complex> c;
    c.reserve(static_cast<size_t>(a.order()));
    for (int k = 0; k < a.order(); ++k) c.push_back(a[k] * s);
    return Jet(std::move(c));
}

Jet reciprocal(const Jet& a) {
    if (a[0].is_zero()) throw DegenerateSeries("reciprocal of series with zero constant term");
    int n = a.order();
    std::vector<Complex> r(static_cast<size_t>(n), Complex::zero(a.prec()));
    r[0] = Complex::one(a.prec()) / a[0];
    for (int k = 1; k < n; ++k) {
        Complex acc = Complex::zero(a.prec());
        for (int i = 1; i <= k; ++i) acc += a[i] * r[static_cast<size_t>(k - i)];
        r[static_cast<size_t>(k)] = -(acc / a[0]);
    }
    return Jet(std::move(r));
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b.truncated(a.order())); }

Complex Jet::eval(const Complex& z) const {
    Complex acc = c_.back();
    for (int k = order() - 2; k >= 0; --k) acc = acc * z + c_[static_cast<size_t>(k)];
    return acc;
}

Jet derive(const Jet& a) {
    int n = std::max(1, a.order() - 1);
    std::vector<Complex> c;
    c.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        c.push_back(k + 1 < a.order() ? a[k + 1] * static_cast<long>(k + 1)
                                      : Complex::zero(a.prec()));
    }
    return Jet(std::move(c));
}

Jet exp(const Jet& a) {
    // e' = a' e, solved coefficient by coefficient; constant term may be anything.
    int n = a.order();
    std::vector<Complex> e(static_cast<size_t>(n), Complex::zero(a.prec()));
    e[0] = exp(a[0]);
    for (int k = 1; k < n; ++k) {
        Complex acc = Complex::zero(a.prec());
        for (int i = 1; i <= k; ++i) acc += a[i] * static_cast<long>(i) * e[static_cast<size_t>(k - i)];
        e[static_cast<size_t>(k)] = acc / static_cast<long>(k);
    }
    return Jet(std::move(e));
}

Jet log(const Jet& a) {
    if (a[0].is_zero()) throw DegenerateSeries("log of series with zero constant term");
    int n = a.order();
    std::vector<Complex> l(static_cast<size_t>(n), Complex::zero(a.prec()));
    l[0] = log(a[0]);
    // l' = a'/a
    Jet q = derive(a) / a.truncated(std::max(1, n - 1));
    for (int k = 1; k < n; ++k) l[static_cast<size_t>(k)] = q[k - 1] / static_cast<long>(k);
    return Jet(std::move(l));
}

Jet pow(const Jet& a, const Complex& e) { return exp(log(a) * e); }

Jet sqrt(const Jet& a) { return pow(a, Complex::of(0.5, 0.0, a.prec())); }

Jet compose(const Jet& g, const Jet& f) {
    if (!f[0].is_zero()) throw DegenerateSeries("composition requires zero inner constant term");
    int n = std::min(g.order(), f.order());
    Jet gt = g.truncated(n);
    // Horner in f
    Jet acc = Jet::constant(gt[n - 1], n);
    for (int k = n - 2; k >= 0; --k) {
        acc = acc * f.truncated(n);
        acc[0] += gt[k];
    }
    return acc;
}

Jet jet_reversion(const Jet& v, int order) {
    if (order < 1) throw InvalidOrder("reversion order < 1");
    if (!v[0].is_zero()) throw DegenerateSeries("reversion requires zero constant term");
    Prec prec = v.prec();
    int r = 0;
    for (int k = 1; k < v.order(); ++k) {
        if (!v[k].is_zero()) { r = k; break; }
    }
    if (r == 0) throw DegenerateSeries("reversion of identically zero series");

    // g(rho) = rho * (v/rho^r)^{1/r} has g'(0) != 0 and g^r = v.
    int work = order + 2;
    std::vector<Complex> wc(static_cast<size_t>(work), Complex::zero(prec));
    for (int k = 0; k < work; ++k)
        if (k + r < v.order()) wc[static_cast<size_t>(k)] = v[k + r];
    Jet w = pow(Jet(std::move(wc)), Complex::one(prec) / static_cast<long>(r));
    std::vector<Complex> gc(static_cast<size_t>(work + 1), Complex::zero(prec));
    for (int k = 0; k < work; ++k) gc[static_cast<size_t>(k) + 1] = w[k];
    Jet g(std::move(gc));

    // solve g(rho(lambda)) = lambda by triangular back-substitution
    int n = order;
    std::vector<Complex> rho(static_cast<size_t>(n), Complex::zero(prec));
    if (n >= 2) rho[1] = Complex::one(prec) / g[1];
    for (int m = 2; m < n; ++m) {
        // coefficient of lambda^m in g(rho_{<m}); rho_m enters linearly as g1*rho_m
        Jet part(std::vector<Complex>(rho.begin(), rho.begin() + m));
        Jet comp = compose(g.truncated(m + 1), part.truncated(m + 1));
        rho[static_cast<size_t>(m)] = -(comp[m] / g[1]);
    }
    Jet out(std::move(rho));

    // round-trip check: v(rho(lambda)) == lambda^r to available order
    if (n > r) {
        Jet rt = compose(v.truncated(n), out);
        Real tol = ldexp(Real::of(1L, prec), -(static_cast<long>(prec) - 16));
        Real scale = Real::of(1L, prec);
        for (int k = 0; k < out.order(); ++k) {
            Real m = abs(out[k]);
            if (m > scale) scale = m;
        }
        for (int k = 0; k < rt.order(); ++k) {
            Complex expect = (k == r) ? Complex::one(prec) : Complex::zero(prec);
            if (abs(rt[k] - expect) > tol * scale * 64L)
                throw DegenerateSeries("reversion round-trip residual too large at order " +
                                       std::to_string(k));
        }
    }
    return out;
}

}  // namespace za
