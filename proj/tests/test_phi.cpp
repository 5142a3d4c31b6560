#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "za/phi.hpp"

using namespace za;

namespace {
constexpr Prec P = 256;
std::mt19937 rng(31415);

Config cfg_tol(double tol) {
    Config c;
    c.prec = P;
    c.tol = tol;
    return c;
}

Real tol10(const Config& cfg) { return Real::of(10 * cfg.tol, P); }
}  // namespace

TEST_CASE("crossing invariance") {
    Config cfg = cfg_tol(1e-30);
    PhiArg arg(Real::of(-1L, P), Complex::of(0.2, 0.0, P));
    Complex a = phi_quadrature(arg, 0.3, cfg);
    Complex b = phi_quadrature(arg, 0.7, cfg);
    CHECK(abs(a - b) < Real::of(2 * cfg.tol, P));
}

TEST_CASE("quadrature matches the rational closed form at tau = -2/3") {
    Config cfg = cfg_tol(1e-30);
    Complex u = Complex::of(0.1, 0.05, P);
    PhiArg arg(Real::ratio(-2, 3, P), u);
    Complex q = phi_quadrature(arg, 0.5, cfg);
    Complex r = phi_rational(2, 3, u);
    CHECK(abs(q - r) < tol10(cfg));
}

TEST_CASE("quadrature matches the rational closed form at tau = -1/2") {
    Config cfg = cfg_tol(1e-30);
    Complex u = Complex::of(-0.4, 0.0, P);
    PhiArg arg(Real::ratio(-1, 2, P), u);
    Complex q = phi_quadrature(arg, 0.5, cfg);
    Complex r = phi_rational(1, 2, u);
    CHECK(abs(q - r) < tol10(cfg));
}

TEST_CASE("second recursion identity at an irrational tau") {
    Config cfg = cfg_tol(1e-28);
    Real tau = Real::of(-1.7, P);
    Complex u = Complex::of(0.4, 0.0, P);
    Complex lhs = phi_quadrature(PhiArg(tau, u), 0.5, cfg);
    // Phi(tau, u) = 1 - e^{i pi tau - 2 pi i u} Phi(tau, u - tau)
    Complex rhs = Complex::one(P) -
                  exp(Complex(Real::of(0L, P), Real::pi(P) * tau) -
                      Complex(Real::of(0L, P), Real::two_pi(P)) * u) *
                      phi_quadrature(PhiArg(tau, u - Complex::from_real(tau)), 0.5, cfg);
    CHECK(abs(lhs - rhs) < tol10(cfg));
}

TEST_CASE("both recursion identities hold for 30 random (tau, u)") {
    Config cfg = cfg_tol(1e-24);
    std::uniform_real_distribution<double> dtau(-3.0, -0.2);
    std::uniform_real_distribution<double> du(-0.8, 0.8);
    for (int k = 0; k < 30; ++k) {
        Real tau = Real::of(dtau(rng), P);
        Complex u = Complex::of(du(rng), du(rng) * 0.3, P);
        Complex phi_u = phi_quadrature(PhiArg(tau, u), 0.5, cfg);
        // identity 1: Phi(tau, u) = Phi(tau, u+1) - e^{3 pi i/4}/sqrt|tau| e^{-(i pi/tau)(u+1/2)^2}
        Complex gauss = cis(ldexp(Real::pi(P), -2) * 3L) / sqrt(abs(tau)) *
                        exp(Complex(Real::of(0L, P), -(Real::pi(P) / tau)) *
                            ((u + Real::of(0.5, P)) * (u + Real::of(0.5, P))));
        Complex rhs1 = phi_quadrature(PhiArg(tau, u + 1L), 0.5, cfg) - gauss;
        CHECK(abs(phi_u - rhs1) < tol10(cfg));
        // identity 2 encodes the unit residue at x = 0
        Complex rhs2 = Complex::one(P) -
                       exp(Complex(Real::of(0L, P), Real::pi(P) * tau) -
                           Complex(Real::of(0L, P), Real::two_pi(P)) * u) *
                           phi_quadrature(PhiArg(tau, u - Complex::from_real(tau)), 0.5, cfg);
        CHECK(abs(phi_u - rhs2) < tol10(cfg));
    }
}

TEST_CASE("scaling invariance of the rational closed form") {
    // same tau = -p/q written with scaled integers
    Config cfg = cfg_tol(1e-30);
    std::uniform_real_distribution<double> du(-0.5, 0.5);
    for (auto [p0, q0] : {std::pair<long, long>{1, 2}, {2, 3}, {3, 1}}) {
        Complex u = Complex::of(du(rng), du(rng) * 0.2, P);
        Complex base = phi_rational(p0, q0, u);
        for (long k : {2L, 3L}) {
            Complex scaled = phi_rational(k * p0, k * q0, u);
            CHECK(abs(base - scaled) < tol10(cfg));
        }
    }
}

TEST_CASE("shift identity with N = p") {
    // Phi(tau,u) - Phi(tau,u+p) + (e^{3 pi i/4}/sqrt|tau|) sum_{n<p} e^{-(pi i/tau)(u+n+1/2)^2} = 0
    Config cfg = cfg_tol(1e-28);
    long p = 3, q = 2;
    Real tau = Real::ratio(-p, q, P);
    Complex u = Complex::of(0.25, 0.0, P);
    Complex a = phi_rational(p, q, u);
    Complex b = phi_rational(p, q, u + Real::of(p, P));
    Complex acc = Complex::zero(P);
    for (long n = 0; n < p; ++n) {
        Complex w = u + Real::of(n, P) + Real::of(0.5, P);
        acc += exp(Complex(Real::of(0L, P), -(Real::pi(P) / tau)) * (w * w));
    }
    Complex corr = cis(ldexp(Real::pi(P), -2) * 3L) / sqrt(abs(tau)) * acc;
    CHECK(abs(a - b + corr) < tol10(cfg));
}

TEST_CASE("Siegel's function: p = q = 1 closed form") {
    // -i Phi(-1, a - 1/2) e^{-i pi (a^2/2 - 5/8)} = cos pi(a^2/2 - a - 1/8)/cos pi a
    Complex a = Complex::of(0.3, 0.0, P);
    Complex u = a - Real::of(0.5, P);
    Complex lhs = Complex::of(0L, -1L, P) * phi_rational(1, 1, u) *
                  exp(Complex(Real::of(0L, P),
                              -(Real::pi(P) * ((a * a / 2L) - Real::ratio(5, 8, P)).re())));
    Complex rhs = siegel_psi(a);
    CHECK(abs(lhs - rhs) < ldexp(Real::of(1L, P), -200));
    // and the inverse relation route
    CHECK(abs(phi_from_siegel_psi(u) - phi_rational(1, 1, u)) < ldexp(Real::of(1L, P), -200));
}

TEST_CASE("phi_jet: coefficient zero equals the plain value") {
    Config cfg = cfg_tol(1e-28);
    PhiArg arg = PhiArg::of_rational(3, 2, Complex::of(0.2, 0.0, P), P);
    Jet j = phi_jet(arg, 4, cfg);
    CHECK(abs(j[0] - phi_rational(3, 2, arg.u)) < ldexp(Real::of(1L, P), -200));
    PhiArg argq(Real::of(-1.3, P), Complex::of(0.1, 0.0, P));
    Jet jq = phi_jet(argq, 2, cfg);
    CHECK(abs(jq[0] - phi_quadrature(argq, 0.5, cfg)) < tol10(cfg));
}

TEST_CASE("first derivative against a central finite difference") {
    Config cfg = cfg_tol(1e-30);
    Real h = Real::of(1e-6, P);
    PhiArg arg(Real::of(-1L, P), Complex::of(0.3, 0.0, P));
    arg.rational = PhiArg::Rational{1, 1};
    Jet j = phi_jet(arg, 2, cfg);
    Complex up = phi_rational(1, 1, arg.u + h);
    Complex dn = phi_rational(1, 1, arg.u - h);
    Complex fd = (up - dn) / (Complex::from_real(h) * 2L);
    CHECK(abs(j.derivative_value(1) - fd) / abs(fd) < Real::of(1e-8, P));
}

TEST_CASE("jet through the closed form vs differentiated quadrature") {
    Config cfg = cfg_tol(1e-26);
    Complex u = Complex::of(0.2, 0.0, P);
    PhiArg arg = PhiArg::of_rational(3, 2, u, P);  // tau = -3/2
    Jet closed = phi_jet(arg, 3, cfg);
    PhiArg argq(Real::ratio(-3, 2, P), u);
    Jet quad = phi_jet_quadrature(argq, 3, 0.5, cfg);
    for (int k = 0; k < 3; ++k)
        CHECK(abs(closed[k] - quad[k]) < Real::of(20 * cfg.tol, P));
    // Siegel route derivative consistency at tau = -1
    PhiArg arg1 = PhiArg::of_rational(1, 1, Complex::of(0.15, 0.0, P), P);
    Jet a = phi_jet(arg1, 3, cfg);
    Jet b = phi_jet_from_siegel_psi(arg1.u, 3);
    for (int k = 0; k < 3; ++k)
        CHECK(abs(a[k] - b[k]) < ldexp(Real::of(1L, P), -180));
}

TEST_CASE("near-singular denominator raises") {
    // q even and u = 0 makes 1 - (-1)^q e^{-pi i q p - 2 pi i q u} vanish for even p q
    CHECK_THROWS_AS(phi_rational(1, 2, Complex::of(0L, 0L, P)), NearSingularU);
    CHECK_THROWS_AS(phi_rational(2, 2, Complex::of(1L, 0L, P)), NearSingularU);
}

TEST_CASE("u reduction: large |Re u| goes through the shift identities") {
    Config cfg = cfg_tol(1e-26);
    Real tau = Real::of(-1.3, P);
    Complex u_small = Complex::of(0.23, 0.0, P);
    Complex u_big = u_small + 7L;
    // compare against the recursion ladder built from the small-u value
    Complex ladder = phi_quadrature(PhiArg(tau, u_small), 0.5, cfg);
    Complex pref = cis(ldexp(Real::pi(P), -2) * 3L) / sqrt(abs(tau));
    for (long n = 0; n < 7; ++n) {
        Complex w = u_small + Real::of(n, P) + Real::of(0.5, P);
        ladder += pref * exp(Complex(Real::of(0L, P), -(Real::pi(P) / tau)) * (w * w));
    }
    Complex direct = phi_quadrature(PhiArg(tau, u_big), 0.5, cfg);
    CHECK(abs(direct - ladder) < Real::of(30 * cfg.tol, P));
}
