#include "za/phi.hpp"

#include <cmath>

namespace za {

namespace {

Jet jet_cos(const Jet& a) {
    Complex iu = Complex::i(a.prec());
    Jet e1 = exp(a * iu);
    Jet e2 = exp(a * (-iu));
    return (e1 + e2) * Complex::of(0.5, 0.0, a.prec());
}

// u as a jet: u0 + delta
Jet u_jet(const Complex& u0, int order) {
    Jet j = Jet::variable(order, u0.prec());
    j[0] = u0;
    return j;
}

Real near_singular_threshold(Prec p) {
    return pow(Real::of(10L, p), Real::of(-static_cast<double>(p) / 4.0, p));
}

// closed form as a jet in u around u0
Jet phi_rational_jet(long p, long q, const Complex& u0, int order) {
    const Prec prec = u0.prec();
    Real pi = Real::pi(prec);
    Jet u = u_jet(u0, order);
    // sign (-1)^{q(1+p)} from (-1)^q e^{-i pi q p}
    long sgn = ((q * (1 + p)) % 2 == 0) ? 1 : -1;
    Complex m2piq = Complex(Real::of(0L, prec), -(Real::two_pi(prec) * Real::of(q, prec)));
    Jet equ = exp(u * m2piq) * Complex::of(sgn, 0L, prec);  // (-1)^{q(1+p)} e^{-2 pi i q u}
    Jet D = -equ;
    D[0] += Complex::one(prec);
    if (abs(D[0]) < near_singular_threshold(prec))
        throw NearSingularU("|1 - (-1)^q e^{-i pi q p - 2 pi i q u}| = " + abs(D[0]).str(6));

    Jet s1 = Jet::constant(Complex::zero(prec), order);
    for (long n = 0; n < q; ++n) {
        // (-1)^n e^{-i pi n^2 p / q} with the angle reduced exactly mod 2q
        long red = (n * n * p) % (2 * q);
        Real angle = -(pi * Real::of(red, prec)) / Real::of(q, prec);
        Complex c = cis(angle) * Complex::of((n % 2 == 0) ? 1L : -1L, 0L, prec);
        Complex m2pin = Complex(Real::of(0L, prec), -(Real::two_pi(prec) * Real::of(n, prec)));
        s1 = s1 + exp(u * m2pin) * c;
    }

    Jet s2 = Jet::constant(Complex::zero(prec), order);
    Complex ipiqp = Complex(Real::of(0L, prec), pi * Real::of(q, prec) / Real::of(p, prec));
    for (long n = 0; n < p; ++n) {
        Jet w = u + Jet::constant(Complex::from_real(Real::of(n, prec) + Real::of(0.5, prec)), order);
        s2 = s2 + exp(w * w * ipiqp);
    }
    Real rt = sqrt(Real::of(p, prec) / Real::of(q, prec));
    Complex pref = cis(ldexp(pi, -2) * 3L) / rt;  // e^{3 pi i/4}/sqrt(p/q)
    s2 = equ * s2 * pref;

    return (s1 + s2) / D;
}

struct UReduction {
    Complex u_reduced;
    long shift;  // u = u_reduced + shift
};

UReduction reduce_u(const Complex& u) {
    double re = u.re().to_double();
    long m = std::lround(re);
    return {u - Complex::of(m, 0L, u.prec()), m};
}

// correction jet C(u) with Phi(tau, u) = Phi(tau, u - m) + C when m > 0,
// Phi(tau, u) = Phi(tau, u + |m|) - C' for m < 0; handled uniformly below.
Jet shift_correction_jet(const Real& tau, const Complex& u0, long m, int order) {
    const Prec prec = u0.prec();
    Real pi = Real::pi(prec);
    Complex pref = cis(ldexp(pi, -2) * 3L) / sqrt(abs(tau));
    Complex mip_over_tau = Complex(Real::of(0L, prec), -(pi / tau));
    Jet acc = Jet::constant(Complex::zero(prec), order);
    Jet u = u_jet(u0, order);
    long lo = (m > 0) ? -m : 0;
    long hi = (m > 0) ? -1 : -m - 1;
    // m > 0:  Phi(u) = Phi(u-m) + pref*sum_{n=0}^{m-1} e^{-(i pi/tau)(u-m+n+1/2)^2}
    // m < 0:  Phi(u) = Phi(u+|m|) - pref*sum_{n=0}^{|m|-1} e^{-(i pi/tau)(u+n+1/2)^2}
    for (long n = lo; n <= hi; ++n) {
        Jet w = u + Jet::constant(Complex::from_real(Real::of(n, prec) + Real::of(0.5, prec)), order);
        acc = acc + exp(w * w * mip_over_tau);
    }
    acc = acc * pref;
    if (m < 0) acc = -acc;
    return acc;
}

Complex phi_quadrature_raw(const Real& tau, const Complex& u, double crossing, const Config& cfg,
                           int deriv_order) {
    const Prec prec = tau.prec();
    Real pi = Real::pi(prec);
    Complex dir = cis(ldexp(pi, -2) * 3L);  // e^{3 pi i/4}
    Complex c0 = Complex::of(crossing, 0.0, prec);

    double abs_tau = -tau.to_double();
    double bu = 2.0 * M_PI * (Complex::i(prec) * u * dir).re().to_double();
    double bc = std::sqrt(2.0) * M_PI * crossing * abs_tau;
    double B = std::abs(bu) + std::abs(bc);
    double L = -std::log(cfg.tol * 1e-2) + 4.0 * deriv_order;
    double R = (B + std::sqrt(B * B + 4.0 * M_PI * abs_tau * (L + 8.0))) / (2.0 * M_PI * abs_tau) + 2.0;

    Complex itau = Complex(Real::of(0L, prec), pi * tau);
    Complex i2pu = Complex(Real::of(0L, prec), Real::two_pi(prec)) * u;
    Complex ipi = Complex(Real::of(0L, prec), pi);
    Integrand f = [&](const Complex& x) {
        Complex num = exp(itau * x * x + i2pu * x);
        if (deriv_order > 0) num *= pow_si(Complex(Real::of(0L, prec), Real::two_pi(prec)) * x,
                                           deriv_order);
        Complex den = exp(ipi * x) - exp(-(ipi * x));
        return num / den;
    };

    Complex a = c0 - dir * Real::of(R, prec);
    Complex b = c0 + dir * Real::of(R, prec);
    QuadratureOptions opt;
    opt.tol = cfg.tol;
    QuadratureResult res = integrate_segment(f, a, b, opt);
    return res.value;
}

}  // namespace

Complex phi_rational(long p, long q, const Complex& u) {
    if (p <= 0 || q <= 0) throw RegimeViolation("p, q must be positive");
    return phi_rational_jet(p, q, u, 1)[0];
}

Complex phi_quadrature(const PhiArg& arg, double crossing, const Config& cfg) {
    if (!(crossing > 0.0) || !(crossing < 1.0))
        throw RegimeViolation("crossing must lie in (0,1)");
    UReduction red = reduce_u(arg.u);
    Complex base = phi_quadrature_raw(arg.tau, red.u_reduced, crossing, cfg, 0);
    if (red.shift == 0) return base;
    Jet corr = shift_correction_jet(arg.tau, arg.u, red.shift, 1);
    return base + corr[0];
}

Jet phi_jet_quadrature(const PhiArg& arg, int order, double crossing, const Config& cfg) {
    UReduction red = reduce_u(arg.u);
    std::vector<Complex> coeffs;
    Real fact = Real::of(1L, arg.u.prec());
    for (int k = 0; k < order; ++k) {
        if (k > 1) fact *= k;
        Complex dk = phi_quadrature_raw(arg.tau, red.u_reduced, crossing, cfg, k);
        coeffs.push_back(dk / fact);
    }
    Jet base(std::move(coeffs));
    if (red.shift == 0) return base;
    return base + shift_correction_jet(arg.tau, arg.u, red.shift, order);
}

Jet phi_jet(const PhiArg& arg, int order, const Config& cfg) {
    if (order < 1 || order > 9) throw InvalidOrder("phi_jet supports 1..9 coefficients");
    if (arg.rational) return phi_rational_jet(arg.rational->p, arg.rational->q, arg.u, order);
    return phi_jet_quadrature(arg, order, 0.5, cfg);
}

Complex siegel_psi(const Complex& a) {
    const Prec p = a.prec();
    Real pi = Real::pi(p);
    Complex num = cos((a * a / 2L - a - Real::ratio(1, 8, p)) * pi);
    Complex den = cos(a * pi);
    return num / den;
}

Complex phi_from_siegel_psi(const Complex& u) {
    return phi_jet_from_siegel_psi(u, 1)[0];
}

Jet phi_jet_from_siegel_psi(const Complex& u, int order) {
    const Prec p = u.prec();
    Real pi = Real::pi(p);
    Jet a = u_jet(u, order);
    a[0] += Real::of(0.5, p);  // a = u + 1/2
    Complex ipi = Complex(Real::of(0L, p), pi);
    Jet num = jet_cos((a * a * Complex::of(0.5, 0.0, p) - a - Jet::constant(
                          Complex::from_real(Real::ratio(1, 8, p)), order)) * Complex::from_real(pi));
    Jet den = jet_cos(a * Complex::from_real(pi));
    Jet psi = num / den;
    // Phi(-1, u) = i Psi(a) e^{i pi (a^2/2 - 5/8)}
    Jet phase = exp((a * a * Complex::of(0.5, 0.0, p) - Jet::constant(
                        Complex::from_real(Real::ratio(5, 8, p)), order)) * ipi);
    return psi * phase * Complex::i(p);
}

}  // namespace za
