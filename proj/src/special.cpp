#include "za/special.hpp"

#include <map>
#include <mutex>

#include "za/bernoulli.hpp"
#include "za/oracle.hpp"

namespace za {

namespace {

// Stirling series for log Gamma, valid once |z| is large enough for the
// target precision. Shift threshold ~0.35*P keeps the divergent tail far
// below 2^-P even on the imaginary axis.
Complex log_gamma_stirling(const Complex& z) {
    const Prec p = z.prec();
    Complex lz = log(z);
    Complex acc = (z - Real::of(0.5, p)) * lz - z;
    Real half_log_2pi = ldexp(log(Real::two_pi(p)), -1);
    acc += half_log_2pi;
    Complex zinv2 = Complex::one(p) / (z * z);
    Complex zpow = Complex::one(p) / z;  // z^{-(2k-1)}
    Real eps = ldexp(Real::of(1L, p), -(static_cast<long>(p) + 8));
    for (int k = 1; k <= 400; ++k) {
        mpq_class coeff = bernoulli(2 * k) / mpq_class(2 * k * (2 * k - 1));
        Complex term = zpow * rational_real(coeff, p);
        acc += term;
        if (abs(term) < eps * abs(acc)) break;
        zpow *= zinv2;
    }
    return acc;
}

long stirling_radius(Prec p) { return std::max<long>(32, static_cast<long>(0.35 * static_cast<double>(p)) + 8); }

}  // namespace

Complex log_gamma_right(const Complex& s) {
    const Prec p = s.prec();
    const long r0 = stirling_radius(p);
    if (abs(s) >= Real::of(r0, p)) return log_gamma_stirling(s);
    // shift: Gamma(z) = Gamma(z+m) / (z (z+1) ... (z+m-1))
    long m = r0 - floor_long(s.re()) + 1;
    Complex prod = Complex::one(p);
    for (long j = 0; j < m; ++j) prod *= (s + j);
    return log_gamma_stirling(s + m) - log(prod);
}

Complex gamma_fn(const Complex& s) {
    const Prec p = s.prec();
    if (s.im().is_zero()) {
        Real fl = floor(s.re());
        if (fl == s.re() && s.re() <= 0L) throw PoleAt("Gamma(" + s.re().str(8) + ")");
    }
    if (s.re() >= Real::of(0.5, p)) return exp(log_gamma_right(s));
    // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
    Complex pis = s * Real::pi(p);
    Complex denom = sin(pis) * exp(log_gamma_right(Complex::one(p) - s));
    return Complex::from_real(Real::pi(p)) / denom;
}

Complex chi(const Complex& s) {
    const Prec p = s.prec();
    Complex g = (Complex::one(p) - s).re() >= Real::of(0.5, p)
                    ? exp(log_gamma_right(Complex::one(p) - s))
                    : gamma_fn(Complex::one(p) - s);
    return pow(Real::two_pi(p), s) / Real::pi(p) * sin(s * ldexp(Real::pi(p), -1)) * g;
}

Real c_sigma(const Real& sigma) {
    return ldexp(sigma * (1L - sigma), -1) - Real::ratio(1, 12, sigma.prec());
}

static Complex one_over_t_factor(const StripPoint& s, ChiOrder order, int sign) {
    const Prec p = s.prec();
    if (order == ChiOrder::leading) return Complex::one(p);
    return Complex::one(p) + Complex(Real::of(0L, p), Real::of(sign, p) * c_sigma(s.sigma) / s.t);
}

ChiAsymptotic chi_asymptotic(const StripPoint& s, ChiOrder order) {
    const Prec p = s.prec();
    if (s.t < 10L) throw OutOfAsymptoticRange("requires t >= 10");
    // (2*pi)^{s-1/2} t^{1/2-s} e^{i pi/4} e^{it} [1 - i c(sigma)/t]
    Complex spos = s.s();
    Complex a = pow(Real::two_pi(p), spos - Real::of(0.5, p));
    Complex b = pow(s.t, Complex::from_real(Real::of(0.5, p)) - spos);
    Complex phase = cis(ldexp(Real::pi(p), -2)) * cis(s.t);
    return ChiAsymptotic{a * b * phase * one_over_t_factor(s, order, -1), order};
}

Complex gamma1ms_asymptotic(const StripPoint& s, ChiOrder order) {
    const Prec p = s.prec();
    if (s.t < 10L) throw OutOfAsymptoticRange("requires t >= 10");
    // sqrt(2*pi) t^{1/2-s} e^{-i pi(1-s)/2} e^{i pi/4} e^{it} [1 - i c(sigma)/t]
    Complex spos = s.s();
    Complex a = pow(s.t, Complex::from_real(Real::of(0.5, p)) - spos);
    Complex e1 = exp(Complex(Real::of(0L, p), -ldexp(Real::pi(p), -1)) * (Complex::one(p) - spos));
    Complex phase = cis(ldexp(Real::pi(p), -2)) * cis(s.t);
    return sqrt(Real::two_pi(p)) * a * e1 * phase * one_over_t_factor(s, order, -1);
}

namespace {
std::mutex g_zeta_int_mutex;
std::map<std::pair<int, Prec>, Real> g_zeta_int;
}  // namespace

Real zeta_int(int m, Prec prec) {
    {
        std::lock_guard<std::mutex> lock(g_zeta_int_mutex);
        auto it = g_zeta_int.find({m, prec});
        if (it != g_zeta_int.end()) return it->second;
    }
    int digits = static_cast<int>(static_cast<double>(prec) * 0.30103) - 6;
    Real v = zeta_reference(Complex::of(static_cast<long>(m), 0L, prec), digits).re();
    std::lock_guard<std::mutex> lock(g_zeta_int_mutex);
    g_zeta_int.insert({{m, prec}, v});
    return v;
}

// zeta at nonpositive even/odd integers: zeta(0) = -1/2, zeta(-n) = -B_{n+1}/(n+1)
static Real zeta_nonpos(int n, Prec prec) {
    if (n == 0) return Real::of(-1L, prec) / 2L;
    mpq_class q = -bernoulli(-n + 1) / mpq_class(-n + 1);
    return rational_real(q, prec);
}

Complex polylog_unit(int m, const Real& eta, double delta) {
    const Prec p = eta.prec();
    if (m < 1) throw InvalidOrder("polylog needs m >= 1");
    require_lattice_distance(eta, delta, "eta");

    // reduce to theta in (0, pi] (conjugate symmetry for theta > pi)
    Real two_pi = Real::two_pi(p);
    Real theta = fmod(eta, two_pi);
    if (theta.sign() < 0) theta += two_pi;
    bool conj_out = false;
    if (theta > Real::pi(p)) {
        theta = two_pi - theta;
        conj_out = true;
    }

    Complex result(p);
    if (m == 1) {
        // -log(1 - e^{i theta})
        result = -log(Complex::one(p) - cis(theta));
    } else {
        // Li_m(e^{mu}) = sum_{k>=0, k != m-1} zeta(m-k) mu^k / k!
        //             + mu^{m-1}/(m-1)! (H_{m-1} - log(-mu)),  mu = i*theta
        Complex mu = Complex(Real::of(0L, p), theta);
        Complex mupow = Complex::one(p);
        Real kfact = Real::of(1L, p);
        Complex acc = Complex::zero(p);
        Real eps = ldexp(Real::of(1L, p), -(static_cast<long>(p) + 8));
        // ratio of consecutive tail terms approaches theta/(2*pi) <= 1/2
        int kmax = static_cast<int>(p) + m + 64;
        for (int k = 0; k <= kmax; ++k) {
            if (k > 0) {
                mupow *= mu;
                kfact *= k;
            }
            if (k == m - 1) continue;
            Real zv = (m - k >= 2) ? zeta_int(m - k, p) : zeta_nonpos(m - k, p);
            if (zv.is_zero()) continue;
            Complex term = mupow * (zv / kfact);
            acc += term;
            if (k > m + 4 && abs(term) < eps) break;
        }
        // the log term
        Real Hm = Real::of(0L, p);
        for (int j = 1; j <= m - 1; ++j) Hm += 1L / Real::of(j, p);
        Complex mup = pow_si(mu, m - 1);
        Real f = Real::of(1L, p);
        for (int j = 2; j <= m - 1; ++j) f *= j;
        // log(-mu) = log(theta) - i pi/2 for mu = i theta, theta > 0
        Complex logneg = Complex(log(theta), -ldexp(Real::pi(p), -1));
        acc += mup / f * (Complex::from_real(Hm) - logneg);
        result = acc;
    }
    return conj_out ? conj(result) : result;
}

Complex polylog_unit_partial(int m, const Real& eta, long K) {
    const Prec p = eta.prec();
    Complex w = cis(eta);
    Complex wk = Complex::one(p);
    Complex acc = Complex::zero(p);
    for (long k = 1; k <= K; ++k) {
        wk *= w;
        acc += wk / pow_si(Complex::from_real(Real::of(k, p)), m);
    }
    return acc;
}

}  // namespace za
