#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "za/oracle.hpp"
#include "za/special.hpp"

using namespace za;

namespace {
constexpr Prec P = 256;
Real tol_bits(long drop) { return ldexp(Real::of(1L, P), -(256 - drop)); }

// rotated value Z(t) = Re( zeta(1/2 + it) / sqrt(chi(1/2 + it)) ), real on the line
Real hardy_z(const Real& t, int digits) {
    Complex s = Complex(Real::of(0.5, P), t);
    Complex z = zeta_reference(s, digits);
    Complex c = chi(s);
    return (z / sqrt(c)).re();
}

}  // namespace

TEST_CASE("zeta(2) = pi^2/6 to the requested digits") {
    for (int digits : {20, 40, 60}) {
        Complex v = zeta_reference(Complex::of(2L, 0L, P), digits);
        Real expect = Real::pi(P) * Real::pi(P) / 6L;
        Real err = abs(v - Complex::from_real(expect));
        CHECK(err < pow(Real::of(10L, P), Real::of(-digits, P)));
    }
}

TEST_CASE("conjugation symmetry") {
    Complex s = Complex::of(0.5, 25.0, P);
    Complex a = zeta_reference(conj(s), 40);
    Complex b = conj(zeta_reference(s, 40));
    CHECK(abs(a - b) < pow(Real::of(10L, P), Real::of(-39L, P)));
}

TEST_CASE("pole and precision-budget errors") {
    CHECK_THROWS_AS(zeta_reference(Complex::of(1L, 0L, P), 20), PoleAt);
    CHECK_THROWS_AS(zeta_reference(Complex::of(2L, 0L, P), 100), Error);
}

TEST_CASE("digits d and d+10 agree to 10^{-d}") {
    Complex s = Complex::of(0.3, 77.7, P);
    Complex a = zeta_reference(s, 30);
    Complex b = zeta_reference(s, 40);
    CHECK(abs(a - b) < pow(Real::of(10L, P), Real::of(-30L, P)));
}

TEST_CASE("certified remainder bound is honored") {
    ZetaEmResult r = zeta_euler_maclaurin(Complex::of(0.5, 300.0, P), 35);
    Complex better = zeta_reference(Complex::of(0.5, 300.0, P), 50);
    CHECK(abs(r.value - better) <= r.remainder_bound);
}

TEST_CASE("first critical-line zero bracketed in (14.1, 14.2) by bisection") {
    Real lo = Real::of(14.1, P), hi = Real::of(14.2, P);
    REQUIRE(hardy_z(lo, 30).sign() != hardy_z(hi, 30).sign());
    auto bisect = [&](int digits) {
        Real a = lo, b = hi;
        int sa = hardy_z(a, digits).sign();
        for (int k = 0; k < 60; ++k) {
            Real mid = ldexp(a + b, -1);
            if (hardy_z(mid, digits).sign() == sa) a = mid;
            else b = mid;
        }
        return ldexp(a + b, -1);
    };
    Real z1 = bisect(30);
    Real z2 = bisect(40);
    CHECK(abs(z1 - z2) < Real::of(1e-12, P));
    CHECK(z1 > Real::of(14.13, P));
    CHECK(z1 < Real::of(14.14, P));
}

TEST_CASE("truncated Dirichlet residual is within 10 x^{-sigma}") {
    StripPoint s = StripPoint::of(0.5, 50.0, P);
    Real x = Real::of(1000L, P);
    EvalResult r = zeta_truncated_dirichlet(s, x, P);
    Complex ref = zeta_reference(s.s(), 40);
    Real resid = abs(ref - r.value);
    CHECK(resid < 10L * r.predicted_error_mag);
    CHECK(abs(r.predicted_error_mag - pow(x, -s.sigma)) < tol_bits(16) * r.predicted_error_mag);
}

TEST_CASE("truncated Dirichlet residual decays like x^{-sigma}") {
    StripPoint s = StripPoint::of(0.7, 50.0, P);
    Complex ref = zeta_reference(s.s(), 45);
    std::vector<double> resid;
    for (double x : {1e3, 1e4, 1e5}) {
        EvalResult r = zeta_truncated_dirichlet(s, Real::of(x, P), P);
        resid.push_back(abs(ref - r.value).to_double());
    }
    double slope1 = std::log10(resid[1] / resid[0]);
    double slope2 = std::log10(resid[2] / resid[1]);
    CHECK(slope1 == doctest::Approx(-0.7).epsilon(0.15));
    CHECK(slope2 == doctest::Approx(-0.7).epsilon(0.15));
}

TEST_CASE("truncated Dirichlet regime rejection") {
    StripPoint s = StripPoint::of(0.5, 1000.0, P);
    Real x = Real::of(100L, P);  // x < t/(2 pi)
    CHECK_THROWS_AS(zeta_truncated_dirichlet(s, x, P), RegimeViolation);
}
