#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "za/expansions.hpp"
#include "za/oracle.hpp"
#include "za/special.hpp"

using namespace za;

namespace {
constexpr Prec P = 256;
std::mt19937 rng(20260810);

Config cfg_default() {
    Config c;
    c.prec = P;
    c.tol = 1e-40;
    return c;
}

Real tolb(long drop) { return ldexp(Real::of(1L, P), -(256 - drop)); }

// printed polynomials for c_0..c_6
Complex ck_printed(int k, const Real& sg) {
    Real z = Real::of(0L, P);
    switch (k) {
        case 0: return Complex::of(0.5, -0.5, P);
        case 1: return Complex(z, Real::ratio(1, 3, P) - sg);
        case 2: {
            Real q = (6L * sg * sg - 6L * sg + 1L) / (-12L);
            return Complex(q, q);
        }
        case 3: return Complex::from_real(
                   (-45L * pow_si(sg, 3) + 90L * sg * sg - 45L * sg + 4L) / 135L);
        case 4: {
            Real q = (36L * pow_si(sg, 4) - 120L * pow_si(sg, 3) + 120L * sg * sg - 36L * sg + 1L) /
                     432L;
            return Complex(-q, q);
        }
        case 5: return Complex(z, (189L * pow_si(sg, 5) - 945L * pow_si(sg, 4) +
                                   1575L * pow_si(sg, 3) - 987L * sg * sg + 168L * sg + 8L) /
                                      5670L);
        case 6: {
            Real q = (1080L * pow_si(sg, 6) - 7560L * pow_si(sg, 5) + 18900L * pow_si(sg, 4) -
                      20160L * pow_si(sg, 3) + 8190L * sg * sg - 450L * sg - 139L) /
                     194400L;
            return Complex(q, q);
        }
    }
    throw Error("k out of range");
}

// the exact N=3 truncation written as six polylog k-sums; one side at a time.
// side = +1: evaluation at z = +i eta (arguments e^{-i eta}, powers (-x)).
Complex sixsum_bracket(const StripPoint& s, const Real& eta, int side, PolylogTable& table) {
    Real x = s.t / eta;
    Real sg = s.sigma;
    auto li = [&](int m) { return side > 0 ? conj(table.li(m)) : table.li(m); };
    Real xs = side > 0 ? -x : x;
    auto ksum = [&](int choose, int j, int l0) {
        Complex acc = Complex::zero(P);
        Real xm = pow_si(xs, j);
        Real binom = Real::of(1L, P);
        for (int k = 0;; ++k) {
            if (k > 0) {
                binom = binom * Real::of(choose + k, P) / Real::of(k, P);
                xm *= xs;
            }
            Complex term = li(l0 + k) * (binom * xm);
            acc += term;
            if (k > 4 && abs(term) < tolb(-60)) break;
        }
        return acc;
    };
    Real iside = Real::of(side, P);
    Complex acc = ksum(0, 0, 1);
    acc += Complex(Real::of(0L, P), (iside * sg) / eta) * ksum(2, 0, 2);
    acc += Complex(Real::of(0L, P), -(iside * (sg - 1L)) / eta) * ksum(2, 1, 3);
    acc += Complex::from_real(-(sg * (sg + 1L)) / (eta * eta)) * ksum(4, 0, 3);
    acc += Complex::from_real((2L * sg * sg - sg - 2L) / (eta * eta)) * ksum(4, 1, 4);
    acc += Complex::from_real(-((sg - 1L) * (sg - 1L)) / (eta * eta)) * ksum(4, 2, 5);
    return acc;
}

}  // namespace

TEST_CASE("c_k from series reversion match the printed list") {
    for (double sig : {0.0, 0.25, 0.5, 1.0}) {
        Real sg = Real::of(sig, P);
        std::vector<Complex> ck = ck_coefficients(6, sg);
        for (int k = 0; k <= 6; ++k)
            CHECK(abs(ck[static_cast<size_t>(k)] - ck_printed(k, sg)) < tolb(40));
    }
}

TEST_CASE("a_n match the printed forms and their recurrence") {
    std::uniform_real_distribution<double> dsig(0.0, 1.0);
    std::uniform_real_distribution<double> de(5.0, 200.0);
    for (int trial = 0; trial < 10; ++trial) {
        Real sg = Real::of(dsig(rng), P);
        Real t = Real::of(de(rng) * 3, P);
        Real eta = Real::of(de(rng), P);
        StripPoint s(sg, t);
        std::vector<Complex> a = an_coefficients(s, eta, 5);
        Complex ieta = Complex(Real::of(0L, P), eta);
        CHECK(abs(a[0] - Complex::one(P)) < tolb(16));
        CHECK(abs(a[1] - (Complex::from_real(sg - 1L) / ieta)) < tolb(24));
        // a_3 = (-2t + i(sg-3)(sg-2)(sg-1))/(6 eta^3)
        Complex a3 = Complex(-ldexp(t, 1), (sg - 3L) * (sg - 2L) * (sg - 1L)) /
                     Complex::from_real(6L * pow_si(eta, 3));
        CHECK(abs(a[3] - a3) < tolb(24) * abs(a3));
        // a_4 = ((sg-4)(sg-3)(sg-2)(sg-1) + 2 i (4 sg - 7) t)/(24 eta^4)
        Complex a4 = Complex((sg - 4L) * (sg - 3L) * (sg - 2L) * (sg - 1L),
                             ldexp((4L * sg - 7L) * t, 1)) /
                     Complex::from_real(24L * pow_si(eta, 4));
        CHECK(abs(a[4] - a4) < tolb(24) * abs(a4));
        // the defining relation holds term by term
        for (int n = 0; n + 1 < 5; ++n) {
            Complex lhs = ieta * Real::of(n + 1, P) * a[static_cast<size_t>(n) + 1];
            Complex rhs = Complex::from_real(sg - Real::of(n + 1, P)) * a[static_cast<size_t>(n)];
            if (n >= 2)
                rhs -= Complex(Real::of(0L, P), t / (eta * eta)) * a[static_cast<size_t>(n) - 2];
            CHECK(abs(lhs - rhs) < tolb(30) * (abs(lhs) + tolb(-60)));
        }
    }
}

TEST_CASE("a_n are the Taylor coefficients of the steepest-descent phase quotient numerator") {
    // phi(z) = e^{(s-1)log(1+z/(i eta)) - (t/eta) z - i t z^2/(2 eta^2)}: jet cross-check
    Real sg = Real::of(0.3, P);
    Real t = Real::of(120L, P);
    Real eta = Real::of(25L, P);
    StripPoint s(sg, t);
    std::vector<Complex> a = an_coefficients(s, eta, 6);
    int K = 6;
    std::vector<Complex> g(static_cast<size_t>(K), Complex::zero(P));
    Complex ieta = Complex(Real::of(0L, P), eta);
    Complex ipow = Complex::one(P);
    for (int k = 1; k < K; ++k) {
        ipow /= ieta;
        g[static_cast<size_t>(k)] =
            (s.s() - 1L) * ipow * Real::of(k % 2 == 1 ? 1 : -1, P) / Real::of(k, P);
    }
    g[1] -= t / eta;
    g[2] -= Complex(Real::of(0L, P), t / ldexp(eta * eta, 1));
    Jet phi = exp(Jet(std::move(g)));
    for (int k = 0; k < 6; ++k) CHECK(abs(phi[k] - a[static_cast<size_t>(k)]) < tolb(40));
}

TEST_CASE("operator sum: j = 0 term alone matches its polylog expansion") {
    Config cfg = cfg_default();
    cfg.tol = 1e-80;  // push the tail truncation below the comparison threshold
    StripPoint s = StripPoint::of(0.5, 10.0, P);
    Real eta = Real::of(200L, P);
    PolylogTable table(eta, cfg.delta_guard);
    Complex got = operator_sum(s, eta, 1, OpSide::upper, 1, table, cfg);
    // e^{-i t Log(i eta)} (i eta)^{-s} sum_k (-x)^k Li_{k+1}(e^{-i eta})
    Real x = s.t / eta;
    Complex acc = Complex::zero(P);
    Real xm = Real::of(1L, P);
    for (int k = 0; k < 200; ++k) {
        if (k > 0) xm *= -x;
        Complex term = conj(table.li(k + 1)) * xm;
        acc += term;
        if (k > 4 && abs(term) < tolb(-60)) break;
    }
    Complex logz = Complex(log(eta), ldexp(Real::pi(P), -1));
    // e^{-i t Log z} (i eta)^{1-sigma} / (i eta) = (i eta)^{-s}
    Complex expect = exp(-(s.s() * logz)) * acc;
    CHECK(abs(got - expect) < tolb(24) * abs(expect));
}

TEST_CASE("operator sum aggregates equal the six-sum polylog form, side by side") {
    Config cfg = cfg_default();
    cfg.tol = 1e-80;
    StripPoint s = StripPoint::of(0.5, 10.0, P);
    Real eta = Real::of(10000L, P);
    PolylogTable table(eta, cfg.delta_guard);
    Complex ss = s.s();
    Complex half_ipi = Complex(Real::of(0L, P), ldexp(Real::pi(P), -1));

    Complex up = operator_sum(s, eta, 3, OpSide::upper, 1, table, cfg);
    Complex pref_up = exp(-(half_ipi * (Complex::one(P) - ss))) /
                      pow(Real::two_pi(P), Complex::one(P) - ss);
    Complex lhs_up = pref_up * up;
    Complex rhs_up = Complex::of(0L, -1L, P) * pow(eta, -ss) /
                     pow(Real::two_pi(P), Complex::one(P) - ss) * sixsum_bracket(s, eta, +1, table);
    CHECK(abs(lhs_up - rhs_up) < tolb(24) * abs(rhs_up));

    Complex low = operator_sum(s, eta, 3, OpSide::lower, 1, table, cfg);
    Complex pref_low = exp(half_ipi * (Complex::one(P) - ss)) /
                       pow(Real::two_pi(P), Complex::one(P) - ss);
    Complex lhs_low = pref_low * low;
    Complex rhs_low = Complex::of(0L, 1L, P) * pow(eta, -ss) /
                      pow(Real::two_pi(P), Complex::one(P) - ss) * sixsum_bracket(s, eta, -1, table);
    CHECK(abs(lhs_low - rhs_low) < tolb(24) * abs(rhs_low));
}

TEST_CASE("variant reflection: conjugating the plus-variant gives the minus-variant at 1 - sigma") {
    std::uniform_real_distribution<double> dsig(0.0, 1.0);
    std::uniform_real_distribution<double> dt(5.0, 60.0);
    std::uniform_int_distribution<long> dn(1, 5);
    for (int trial = 0; trial < 8; ++trial) {
        Real sg = Real::of(dsig(rng), P);
        Real t = Real::of(dt(rng), P);
        long n = dn(rng);
        Complex z = Complex::of(1.0 + trial * 0.3, 2.0, P);
        for (int j : {0, 1, 2}) {
            SigmaRational plus = operator_term(sg, t, PoleVariant::plus, j);
            SigmaRational minus = operator_term(1L - sg, t, PoleVariant::minus, j);
            Complex lhs = conj(plus.eval(z, n));
            Complex rhs = minus.eval(conj(z), n);
            // conj(z^{1-sg} P/(nz+it)^k) = zbar^{(1-sg)} conj(P)/(n zbar - i t)^k
            CHECK(abs(lhs - rhs) < tolb(30) * abs(rhs));
        }
    }
}

TEST_CASE("region 1, printed N=3 closed form reproduces the first table column") {
    Config cfg = cfg_default();
    StripPoint s = StripPoint::of(0.5, 10.0, P);
    Real eta = Real::of(100L, P);
    EvalResult r = zeta_region1(s, eta, 3, cfg);
    Complex ref = zeta_reference(s.s(), 40);
    Complex err = ref - r.value;
    Complex pinned = Complex::of(-10.4e-5, -5.22e-5, P);
    CHECK((abs(err - pinned) / abs(pinned)).to_double() < 0.02);
}

TEST_CASE("region 1 generic path is consistent with the reference and improves with N") {
    Config cfg = cfg_default();
    StripPoint s = StripPoint::of(0.5, 100.0, P);
    Real eta = Real::of(10000L, P);
    Complex ref = zeta_reference(s.s(), 45);
    EvalResult r2 = zeta_region1_expansion(s, eta, 2, cfg);
    EvalResult r3 = zeta_region1_expansion(s, eta, 3, cfg);
    Real e2 = abs(ref - r2.value);
    Real e3 = abs(ref - r3.value);
    CHECK(e3 < e2);
    CHECK(e2 < r2.predicted_error_mag * 1000L);
    CHECK(e3 < r3.predicted_error_mag * 1000L);
}

TEST_CASE("confluent: generic path equals the explicit N=3 closed form") {
    Config cfg = cfg_default();
    for (double sig : {0.0, 0.5, 1.0}) {
        StripPoint s = StripPoint::of(sig, 100.0, P);
        EvalResult gen = zeta_confluent(s, 3, cfg);
        EvalResult closed = zeta_confluent_closed3(s, cfg);
        CHECK(abs(gen.value - closed.value) < tolb(24) * abs(closed.value));
    }
}

TEST_CASE("confluent reproduces the printed error cells") {
    Config cfg = cfg_default();
    struct Cell { double sig, t, re, im; };
    for (const Cell& c : {Cell{0.0, 10, 1.97e-3, -3.81e-3}, Cell{0.5, 100, -2.74e-7, 23.5e-7},
                          Cell{1.0, 100, -9.41e-8, 82.5e-8}}) {
        StripPoint s = StripPoint::of(c.sig, c.t, P);
        EvalResult r = zeta_confluent(s, 3, cfg);
        Complex ref = zeta_reference(s.s(), 40);
        Complex err = ref - r.value;
        Complex pinned = Complex::of(c.re, c.im, P);
        CHECK((abs(err - pinned) / abs(pinned)).to_double() < 0.02);
    }
}

TEST_CASE("phi series: value at zero and a finite-difference second derivative") {
    Config cfg = cfg_default();
    StripPoint s = StripPoint::of(0.5, 100.0, P);
    Real eta = Real::of(10L, P);
    Jet phi = phi_series_coeffs(s, eta, 5, cfg);
    Complex expect0 = Complex::one(P) / (Complex::one(P) - cis(-eta));
    CHECK(abs(phi[0] - expect0) < tolb(24) * abs(expect0));

    // central finite difference of the defining function
    auto varphi = [&](const Complex& z) {
        Complex num = exp((s.s() - 1L) * log(Complex::one(P) + z / Complex(Real::of(0L, P), eta)) -
                          Complex(Real::of(0L, P), s.t / ldexp(eta * eta, 1)) * z * z -
                          z * Real::of(floor_long(s.t / eta), P));
        return num / (exp(z) - cis(-eta));
    };
    Real h = Real::of(1e-8, P);
    Complex hh = Complex::from_real(h);
    Complex fd2 = (varphi(hh) - varphi(Complex::zero(P)) * 2L + varphi(-hh)) / (hh * hh);
    CHECK(abs(phi.derivative_value(2) - fd2) / abs(fd2) < Real::of(1e-8, P));
}

TEST_CASE("psi series: value at zero and a finite-difference second derivative") {
    Config cfg = cfg_default();
    StripPoint s = StripPoint::of(0.5, 1000.0, P);
    Real eta = Real::of(10000L, P);
    Jet psi = psi_series_coeffs(s, eta, 5, cfg);
    Real mirror = Real::two_pi(P) * s.t / eta;
    Complex expect0 = Complex::one(P) / (Complex::one(P) - cis(mirror));
    CHECK(abs(psi[0] - expect0) < tolb(24) * abs(expect0));

    auto psif = [&](const Complex& z) {
        Complex a = Complex(Real::of(0L, P), eta / (Real::two_pi(P) * s.t));
        Complex num = exp(-(s.s() * log(Complex::one(P) + a * z)) +
                          Complex(Real::of(0L, P),
                                  eta * eta / (ldexp(Real::pi(P) * Real::pi(P) * s.t, 3))) * z * z -
                          z * Real::of(floor_long(eta / Real::two_pi(P)), P));
        return num / (exp(z) - cis(mirror));
    };
    Real h = Real::of(1e-8, P);
    Complex hh = Complex::from_real(h);
    Complex fd2 = (psif(hh) - psif(Complex::zero(P)) * 2L + psif(-hh)) / (hh * hh);
    CHECK(abs(psi.derivative_value(2) - fd2) / abs(fd2) < Real::of(1e-8, P));
}

TEST_CASE("small-eta theorem reproduces printed cells") {
    Config cfg = cfg_default();
    cfg.strict_regimes = false;  // the t = 100 cell sits exactly on eta = sqrt(t)
    struct Cell { double t; double eta; double re, im; };
    for (const Cell& c : {Cell{100, 10, 3.04e-3, 7.27e-3}, Cell{10000, 10, 8.05e-6, -2.53e-6}}) {
        StripPoint s = StripPoint::of(0.5, c.t, P);
        EvalResult r = zeta_small_eta(s, Real::of(c.eta, P), 3, cfg);
        Complex ref = zeta_reference(s.s(), 40);
        Complex err = ref - r.value;
        Complex pinned = Complex::of(c.re, c.im, P);
        CHECK((abs(err - pinned) / abs(pinned)).to_double() < 0.05);
    }
}

TEST_CASE("mirror corollary reproduces a printed in-regime cell") {
    Config cfg = cfg_default();
    StripPoint s = StripPoint::of(0.5, 1000.0, P);
    EvalResult r = zeta_large_eta_mirror(s, Real::of(10000L, P), 2, cfg);
    Complex ref = zeta_reference(s.s(), 40);
    Complex err = ref - r.value;
    Complex pinned = Complex::of(2.45e-7, 186.1e-7, P);
    CHECK((abs(err - pinned) / abs(pinned)).to_double() < 0.05);
}

TEST_CASE("sqrt-region theorem reproduces printed cells (explicit rational tau)") {
    Config cfg = cfg_default();
    cfg.strict_regimes = false;  // the eta = sqrt(200 pi t) column exceeds eta < t at t = 100
    struct Cell { double t; long p, q; double re, im; };
    for (const Cell& c : {Cell{100, 1, 1, 3.59e-3, -10.8e-3}, Cell{100, 100, 1, -5.96e-4, 8.83e-4},
                          Cell{100, 1, 100, 13.7e-6, -5.21e-6}}) {
        StripPoint s = StripPoint::of(0.5, c.t, P);
        Real eta = sqrt(Real::two_pi(P) * s.t * Real::of(c.q, P) / Real::of(c.p, P));
        EvalResult r = zeta_sqrt_region(s, eta, 3, cfg);
        Complex ref = zeta_reference(s.s(), 40);
        Complex err = ref - r.value;
        Complex pinned = Complex::of(c.re, c.im, P);
        CHECK((abs(err - pinned) / abs(pinned)).to_double() < 0.05);
    }
}

TEST_CASE("sqrt-region via quadrature Phi agrees with the rational route") {
    Config cfg = cfg_default();
    cfg.tol = 1e-30;
    StripPoint s = StripPoint::of(0.5, 100.0, P);
    Real eta = Real::of(17L, P);  // tau = -2 pi t/eta^2 irrational
    EvalResult r = zeta_sqrt_region(s, eta, 3, cfg);
    Complex ref = zeta_reference(s.s(), 40);
    CHECK(abs(ref - r.value) < r.predicted_error_mag * 1000L);
}

TEST_CASE("sqrt mirror agrees with the reference inside its regime") {
    Config cfg = cfg_default();
    cfg.tol = 1e-30;
    StripPoint s = StripPoint::of(0.5, 500.0, P);
    Real eta = Real::of(8L, P);  // 2 pi < eta < sqrt(t)/eps
    EvalResult r = zeta_sqrt_mirror(s, eta, 3, cfg);
    Complex ref = zeta_reference(s.s(), 40);
    CHECK(abs(ref - r.value) < r.predicted_error_mag * 1000L);
}

TEST_CASE("regime validation produces structured diagnostics") {
    Config cfg = cfg_default();
    StripPoint s = StripPoint::of(0.5, 100.0, P);
    CHECK_THROWS_AS(zeta_region1(s, Real::of(50L, P), 3, cfg), RegimeViolation);
    CHECK_THROWS_AS(zeta_small_eta(s, Real::of(50L, P), 3, cfg), RegimeViolation);
    ExpansionInput in{s, Real::of(50L, P), 3, 0.05, Regime::region1};
    auto v = validate_regime(in, cfg);
    REQUIRE(v.has_value());
    CHECK(v->find("eta") != std::string::npos);
    // lenient mode computes anyway
    cfg.strict_regimes = false;
    CHECK_NOTHROW(zeta_small_eta(s, Real::of(50L, P), 3, cfg));
}

TEST_CASE("error scaling at fixed eta/t^{3/2}: slope consistent with t^3/eta^{3+sigma}") {
    Config cfg = cfg_default();
    std::vector<double> errs;
    for (double t : {10.0, 100.0, 1000.0}) {
        StripPoint s = StripPoint::of(0.5, t, P);
        Real eta = pow(Real::of(t, P), Real::ratio(3, 2, P));
        EvalResult r = zeta_region1(s, eta, 3, cfg);
        Complex ref = zeta_reference_cached(s.s(), 45);
        errs.push_back(abs(ref - r.value).to_double());
    }
    // t^3/eta^{3+sigma} with eta = t^{3/2}, sigma = 1/2 gives slope -2.25
    double slope = std::log10(errs[2] / errs[0]) / 2.0;
    CHECK(slope == doctest::Approx(-2.25).epsilon(0.07));
}

TEST_CASE("increasing N from 2 to 3 strictly decreases the actual error for t >= 100") {
    Config cfg = cfg_default();
    for (double t : {100.0, 1000.0}) {
        for (double crat : {2.0, 1.0}) {
            StripPoint s = StripPoint::of(0.5, t, P);
            Real eta = pow(Real::of(t, P), Real::ratio(3, 2, P)) * Real::of(crat, P);
            Complex ref = zeta_reference_cached(s.s(), 45);
            Real e2 = abs(ref - zeta_region1_expansion(s, eta, 2, cfg).value);
            Real e3 = abs(ref - zeta_region1_expansion(s, eta, 3, cfg).value);
            CHECK(e3 < e2);
        }
        for (double sig : {0.0, 0.5, 1.0}) {
            StripPoint s = StripPoint::of(sig, t, P);
            Complex ref = zeta_reference_cached(s.s(), 45);
            Real e2 = abs(ref - zeta_confluent(s, 2, cfg).value);
            Real e3 = abs(ref - zeta_confluent(s, 3, cfg).value);
            CHECK(e3 < e2);
        }
    }
}

TEST_CASE("all evaluators meet their predicted error on random in-regime draws, t in [50, 2000]") {
    Config cfg = cfg_default();
    cfg.tol = 1e-36;
    std::mt19937 draw(70707);
    std::uniform_real_distribution<double> dsig(0.0, 1.0), d01(0.0, 1.0);
    const Real safety = Real::of(1000L, P);  // constant-1 convention
    auto ref_at = [&](const StripPoint& s) { return zeta_reference_cached(s.s(), 40); };
    auto guarded = [&](const Real& x) {
        return dist_to_multiple(x, Real::two_pi(P)) > Real::of(0.05, P);
    };

    int done = 0;
    while (done < 10) {  // region 1
        double t = 50.0 + 250.0 * d01(draw);
        double c = 1.0 + 2.0 * d01(draw);
        StripPoint s = StripPoint::of(dsig(draw), t, P);
        Real eta = pow(Real::of(t, P), Real::ratio(3, 2, P)) * Real::of(c, P);
        if (!guarded(eta) || !guarded(s.t)) continue;
        EvalResult r = zeta_region1(s, eta, 3, cfg);
        CHECK(abs(ref_at(s) - r.value) < r.predicted_error_mag * safety);
        ++done;
    }
    done = 0;
    while (done < 10) {  // confluent
        double t = 50.0 + 1950.0 * d01(draw);
        StripPoint s = StripPoint::of(dsig(draw), t, P);
        if (!guarded(s.t)) continue;
        EvalResult r = zeta_confluent(s, 3, cfg);
        CHECK(abs(ref_at(s) - r.value) < r.predicted_error_mag * safety);
        ++done;
    }
    done = 0;
    while (done < 10) {  // small eta
        double t = 400.0 + 1600.0 * d01(draw);
        double eta_d = 3.0 + (0.7 * std::sqrt(t) - 3.0) * d01(draw);
        StripPoint s = StripPoint::of(dsig(draw), t, P);
        Real eta = Real::of(eta_d, P);
        if (!guarded(eta) || !guarded(s.t)) continue;
        EvalResult r = zeta_small_eta(s, eta, 3, cfg);
        CHECK(abs(ref_at(s) - r.value) < r.predicted_error_mag * safety);
        ++done;
    }
    done = 0;
    while (done < 10) {  // large eta mirror
        double t = 50.0 + 1950.0 * d01(draw);
        double lo = 2.0 * 3.14159265 * std::sqrt(t) * 1.3;
        double eta_d = lo + (15.0 * t - lo) * d01(draw);
        if (eta_d < lo || eta_d > 15.0 * t) continue;
        StripPoint s = StripPoint::of(dsig(draw), t, P);
        Real eta = Real::of(eta_d, P);
        Real mirror = Real::two_pi(P) * s.t / eta;
        if (!guarded(mirror) || !guarded(s.t)) continue;
        EvalResult r = zeta_large_eta_mirror(s, eta, 2, cfg);
        CHECK(abs(ref_at(s) - r.value) < r.predicted_error_mag * safety);
        ++done;
    }
    done = 0;
    while (done < 5) {  // sqrt region (quadrature Phi: irrational tau)
        double t = 100.0 + 500.0 * d01(draw);
        double eta_d = std::sqrt(t) * (0.8 + 2.0 * d01(draw));
        StripPoint s = StripPoint::of(dsig(draw), t, P);
        Real eta = Real::of(eta_d, P);
        if (!guarded(eta) || !guarded(s.t)) continue;
        EvalResult r = zeta_sqrt_region(s, eta, 3, cfg);
        CHECK(abs(ref_at(s) - r.value) < r.predicted_error_mag * safety);
        ++done;
    }
    done = 0;
    while (done < 5) {  // sqrt mirror
        double t = 300.0 + 1700.0 * d01(draw);
        double eta_d = 6.5 + (0.8 * std::sqrt(t) - 6.5) * d01(draw);
        StripPoint s = StripPoint::of(dsig(draw), t, P);
        Real eta = Real::of(eta_d, P);
        if (!guarded(eta) || !guarded(s.t)) continue;
        Real mirror = Real::two_pi(P) * s.t / eta;
        if (dist_to_multiple(mirror, Real::two_pi(P)) < Real::of(0.05, P)) continue;
        EvalResult r = zeta_sqrt_mirror(s, eta, 3, cfg);
        CHECK(abs(ref_at(s) - r.value) < r.predicted_error_mag * safety);
        ++done;
    }
}
