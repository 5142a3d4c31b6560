#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "za/jet.hpp"
#include "za/sigma_rational.hpp"

using namespace za;

namespace {

constexpr Prec P = 256;

Real tol_bits(long drop) { return ldexp(Real::of(1L, P), -(256 - drop)); }

std::mt19937 rng(12345);

Complex rand_complex(double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return Complex::of(d(rng), d(rng), P);
}

Jet rand_jet(int order, bool zero_const = false) {
    std::vector<Complex> c;
    for (int k = 0; k < order; ++k) c.push_back(rand_complex());
    if (zero_const) c[0] = Complex::zero(P);
    return Jet(std::move(c));
}

Real jet_dist(const Jet& a, const Jet& b) {
    Real m = Real::of(0L, P);
    for (int k = 0; k < std::min(a.order(), b.order()); ++k) {
        Real d = abs(a[k] - b[k]);
        if (d > m) m = d;
    }
    return m;
}

}  // namespace

TEST_CASE("mixed precision is an error, never silent coercion") {
    Real a = Real::of(1L, 256);
    Real b = Real::of(1L, 128);
    CHECK_THROWS_AS(a + b, PrecisionMismatch);
    Complex x = Complex::of(1L, 2L, 256);
    Complex y = Complex::of(1L, 2L, 192);
    CHECK_THROWS_AS(x * y, PrecisionMismatch);
    CHECK((a + Real::of(2L, 256)).prec() == 256);
}

TEST_CASE("elementary functions round-trip near working precision") {
    Complex z = Complex::of(0.375, -1.25, P);
    CHECK(abs(exp(log(z)) - z) < tol_bits(8));
    CHECK(abs(log(exp(z)) - z) < tol_bits(8));
    Complex s = sin(z);
    Complex c = cos(z);
    CHECK(abs(s * s + c * c - Complex::one(P)) < tol_bits(10));
    // branch cuts: principal vs positive-real-axis cut
    Complex w = Complex::of(-2L, 0L, P);
    CHECK(arg(w, BranchCut::negative_real) == Real::pi(P));
    Complex below = Complex(Real::of(1L, P), Real::of(-1e-30, P));
    Real a_neg = arg(below, BranchCut::negative_real);
    Real a_pos = arg(below, BranchCut::positive_real);
    CHECK(a_neg < 0L);
    CHECK(a_pos > 6L);  // ~2*pi
    CHECK(abs(a_pos - a_neg - Real::two_pi(P)) < tol_bits(16));
}

TEST_CASE("jet ring axioms on randomized draws") {
    for (int trial = 0; trial < 8; ++trial) {
        Jet a = rand_jet(9), b = rand_jet(9), c = rand_jet(9);
        CHECK(jet_dist((a * b) * c, a * (b * c)) < tol_bits(24));
        CHECK(jet_dist(a * (b + c), a * b + a * c) < tol_bits(24));
        CHECK(jet_dist(a * b, b * a) < tol_bits(24));
    }
}

TEST_CASE("exp(log(f)) = f for jets with constant term 1") {
    for (int trial = 0; trial < 6; ++trial) {
        Jet f = rand_jet(10);
        f[0] = Complex::one(P);
        CHECK(jet_dist(exp(log(f)), f) < tol_bits(16));
    }
}

TEST_CASE("jet composition and reciprocal domain checks") {
    Jet f = rand_jet(6);
    Jet g = rand_jet(6);
    CHECK_THROWS_AS(compose(g, f), DegenerateSeries);  // f has nonzero constant term
    Jet z = rand_jet(6, true);
    CHECK_NOTHROW(compose(g, z));
    Jet h = rand_jet(6, true);
    CHECK_THROWS_AS(reciprocal(h), DegenerateSeries);
}

TEST_CASE("reversion of v = -i rho^2/2 gives rho = (1+i) lambda") {
    std::vector<Complex> vc(3, Complex::zero(P));
    vc[2] = Complex::of(0.0, -0.5, P);
    Jet rho = jet_reversion(Jet(std::move(vc)), 2);
    Complex lead = rho[1];
    CHECK(abs(lead * lead - Complex::of(0L, 2L, P)) < tol_bits(16));  // lead^2 = 2i
    CHECK(abs(lead - Complex::of(1L, 1L, P)) < tol_bits(16));         // principal root
}

TEST_CASE("round-trip v(rho(lambda)) = lambda^2 for the confluent phase map") {
    // v = rho - i log(1 - i rho), a double zero at rho = 0
    const int order = 12;
    std::vector<Complex> vc(order, Complex::zero(P));
    for (int k = 2; k < order; ++k) vc[k] = i_pow(k + 1, P) / Real::of(k, P);
    Jet v(vc);
    Jet rho = jet_reversion(v, 10);
    Jet rt = compose(v.truncated(10), rho);
    for (int k = 0; k < rt.order(); ++k) {
        Complex expect = (k == 2) ? Complex::one(P) : Complex::zero(P);
        CHECK(abs(rt[k] - expect) < tol_bits(16));
    }
    // degenerate inputs
    std::vector<Complex> zc(5, Complex::zero(P));
    CHECK_THROWS_AS(jet_reversion(Jet(zc), 4), DegenerateSeries);
    CHECK_THROWS_AS(jet_reversion(v, 0), InvalidOrder);
}

TEST_CASE("sigma_rational_derive reproduces the printed first and second applications") {
    std::uniform_real_distribution<double> dsig(0.0, 1.0);
    std::uniform_real_distribution<double> dt(5.0, 50.0);
    std::uniform_int_distribution<long> dn(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        Real sigma = Real::of(dsig(rng), P);
        Real t = Real::of(dt(rng), P);
        long n = dn(rng);
        Complex z = rand_complex(3.0) + Complex::of(0.2, 4.0, P);  // keep away from poles

        SigmaRational t1 = operator_term(sigma, t, PoleVariant::plus, 1);
        // -z^{1-sigma} (n sigma z + i(sigma-1) t) / (nz + it)^3
        Complex it = Complex(Real::of(0L, P), t);
        Complex den3 = pow_si(z * n + it, 3);
        Complex expect1 = -(pow(z, Complex::from_real(1L - sigma)) *
                            (z * Complex::from_real(sigma * n) +
                             Complex(Real::of(0L, P), (sigma - 1L) * t))) / den3;
        CHECK(abs(t1.eval(z, n) - expect1) < tol_bits(32) * abs(expect1));

        SigmaRational t2 = operator_term(sigma, t, PoleVariant::plus, 2);
        Complex den5 = pow_si(z * n + it, 5);
        Complex num = z * z * Complex::from_real(sigma * (sigma + 1L) * n * n) +
                      Complex(Real::of(0L, P), (2L * sigma * sigma - sigma - 2L) * t * n) * z -
                      Complex::from_real((sigma - 1L) * (sigma - 1L) * t * t);
        Complex expect2 = pow(z, Complex::from_real(1L - sigma)) * num / den5;
        CHECK(abs(t2.eval(z, n) - expect2) < tol_bits(32) * abs(expect2));

        CHECK(t1.pole_power == 3);
        CHECK(t2.pole_power == 5);
    }
}

TEST_CASE("derived term agrees with a central finite difference of the previous term") {
    // evaluate derivative at z0 vs finite difference at z0 +- h, h = 2^{-P/3}
    Real sigma = Real::of(0.3, P);
    Real t = Real::of(12L, P);
    long n = 2;
    Complex z0 = Complex::of(1.25, 2.5, P);
    Real h = ldexp(Real::of(1L, P), -(256 / 3));
    Complex hh = Complex::from_real(h);

    for (int j = 0; j < 3; ++j) {
        SigmaRational tj = operator_term(sigma, t, PoleVariant::plus, j);
        SigmaRational tj1 = sigma_rational_derive(tj);
        // tj1 = (1/(n + it/z)) d/dz tj  =>  d/dz tj = (n + it/z) tj1
        Complex fd = (tj.eval(z0 + hh, n) - tj.eval(z0 - hh, n)) / (hh * 2L);
        Complex it_over_z = Complex(Real::of(0L, P), t) / z0;
        Complex lhs = (Complex::of(n, 0L, P) + it_over_z) * tj1.eval(z0, n);
        Real rel = abs(lhs - fd) / abs(fd);
        CHECK(rel < ldexp(Real::of(1L, P), -(256 / 3) + 8));
    }
}

TEST_CASE("repeated derivation matches naive numerical differentiation at random points") {
    // j <= 4, n <= 5, 64 random (sigma, t, z0) triples, relative error < 1e-10 at P = 256
    std::uniform_real_distribution<double> dsig(0.0, 1.0);
    std::uniform_real_distribution<double> dt(5.0, 40.0);
    std::uniform_int_distribution<long> dn(1, 5);
    Real tol = Real::of(1e-10, P);
    for (int trial = 0; trial < 64; ++trial) {
        Real sigma = Real::of(dsig(rng), P);
        Real t = Real::of(dt(rng), P);
        long n = dn(rng);
        Complex z0 = rand_complex(2.0) + Complex::of(1.5, 3.0, P);
        int j = 1 + static_cast<int>(trial % 4);

        SigmaRational prev = operator_term(sigma, t, PoleVariant::plus, j - 1);
        SigmaRational cur = sigma_rational_derive(prev);
        Real h = Real::of(1e-20, P);
        Complex hh = Complex::from_real(h);
        Complex fd = (prev.eval(z0 + hh, n) - prev.eval(z0 - hh, n)) / (hh * 2L);
        Complex it_over_z = Complex(Real::of(0L, P), t) / z0;
        Complex lhs = (Complex::of(n, 0L, P) + it_over_z) * cur.eval(z0, n);
        CHECK(abs(lhs - fd) / abs(fd) < tol);
    }
}

TEST_CASE("minus variant stays closed and matches its defining recurrence") {
    Real sigma = Real::of(0.7, P);
    Real t = Real::of(9L, P);
    Complex z0 = Complex::of(0.8, -2.25, P);
    long n = 3;
    SigmaRational m0(sigma, t, PoleVariant::minus, P);
    // seed: z^{sigma}/(nz - it) == z^{sigma-1}/(n - it/z)
    Complex seed = pow(z0, Complex::from_real(sigma - 1L)) /
                   (Complex::of(n, 0L, P) - Complex(Real::of(0L, P), t) / z0);
    CHECK(abs(m0.eval(z0, n) - seed) < tol_bits(32) * abs(seed));

    SigmaRational m1 = sigma_rational_derive(m0);
    Real h = ldexp(Real::of(1L, P), -(256 / 3));
    Complex hh = Complex::from_real(h);
    Complex fd = (m0.eval(z0 + hh, n) - m0.eval(z0 - hh, n)) / (hh * 2L);
    Complex lhs = (Complex::of(n, 0L, P) - Complex(Real::of(0L, P), t) / z0) * m1.eval(z0, n);
    CHECK(abs(lhs - fd) / abs(fd) < ldexp(Real::of(1L, P), -(256 / 3) + 8));
    CHECK(m1.pole_power == 3);
}
