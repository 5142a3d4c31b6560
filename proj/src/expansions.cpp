#include "za/expansions.hpp"

#include <cmath>

#include "za/bernoulli.hpp"
#include "za/contour_zeta.hpp"
#include "za/phi.hpp"
#include "za/special.hpp"

namespace za {

namespace {

Real pi_of(Prec p) { return Real::pi(p); }

// Gamma((k+1)/2) for k = 0..kmax
std::vector<Real> gamma_half_table(int kmax, Prec p) {
    std::vector<Real> g;
    g.reserve(static_cast<size_t>(kmax) + 1);
    Real ghalf = sqrt(pi_of(p));  // Gamma(1/2)
    Real gone = Real::of(1L, p);  // Gamma(1)
    for (int k = 0; k <= kmax; ++k) {
        if (k % 2 == 0) {
            g.push_back(ghalf);
            ghalf *= (Real::of(k, p) + 1L) / 2L;  // Gamma(x+1) = x Gamma(x), x = (k+1)/2
        } else {
            g.push_back(gone);
            gone *= (Real::of(k, p) + 1L) / 2L;
        }
    }
    return g;
}

// |e^{-i pi s} Gamma(1-s)| e^{-pi t/2}
Real gamma_prefactor_mag(const StripPoint& s) {
    const Prec p = s.prec();
    Real pt = pi_of(p) * s.t;
    return exp(pt) * abs(gamma_fn(s.one_minus_s())) * exp(-ldexp(pt, -1));
}

// |chi(s) e^{i pi(1-s)} Gamma(s)| e^{-pi t/2}
Real chi_gamma_prefactor_mag(const StripPoint& s) {
    const Prec p = s.prec();
    Real pt = pi_of(p) * s.t;
    return abs(chi(s.s())) * exp(pt) * abs(gamma_fn(s.s())) * exp(-ldexp(pt, -1));
}

}  // namespace

std::optional<std::string> validate_regime(const ExpansionInput& in, const Config& cfg) {
    const Prec p = in.s.prec();
    const double eps = in.epsilon_margin;
    Real eta = in.eta;
    Real t = in.s.t;
    Real epsr = Real::of(eps, p);
    auto lattice = [&](const Real& x, const char* what) -> std::optional<std::string> {
        Real d = dist_to_multiple(x, Real::two_pi(p));
        if (!(d > Real::of(cfg.delta_guard, p)))
            return std::string(what) + " too close to 2*pi*Z (dist " + d.str(4) + ")";
        return std::nullopt;
    };
    if (auto v = lattice(t, "t")) return v;
    switch (in.regime) {
        case Regime::region1:
            if (auto v = lattice(eta, "eta")) return v;
            if (!(eta > (1L + epsr) * t)) return "needs (1+eps) t < eta";
            break;
        case Regime::confluent:
            break;
        case Regime::small_eta: {
            if (!(eta > epsr) || !(eta < sqrt(t))) return "needs eps < eta < sqrt(t)";
            Real d = dist_to_multiple(eta, Real::two_pi(p));
            if (!(d > epsr)) return "needs dist(eta, 2*pi*Z) > eps";
            break;
        }
        case Regime::large_eta_mirror: {
            Real lo = Real::two_pi(p) * sqrt(t);
            Real hi = Real::two_pi(p) * t / epsr;
            if (!(eta > lo) || !(eta < hi)) return "needs 2*pi*sqrt(t) < eta < (2*pi/eps) t";
            Real mirror = Real::two_pi(p) * t / eta;
            Real d = dist_to_multiple(mirror, Real::two_pi(p));
            if (!(d > epsr)) return "needs dist(2*pi*t/eta, 2*pi*Z) > eps";
            break;
        }
        case Regime::sqrt_region:
            if (!(eta > epsr * sqrt(t)) || !(eta < t)) return "needs eps*sqrt(t) < eta < t";
            if (!(in.N >= 1) || !(Real::of(in.N, p) < Real::of(cfg.A_const, p) * t))
                return "needs 1 <= N < A t";
            break;
        case Regime::sqrt_mirror:
            if (!(eta > Real::two_pi(p)) || !(eta < sqrt(t) / epsr))
                return "needs 2*pi < eta < sqrt(t)/eps";
            if (!(in.N >= 1) || !(Real::of(in.N, p) < Real::of(cfg.A_const, p) * t))
                return "needs 1 <= N < A t";
            break;
    }
    return std::nullopt;
}

std::vector<Complex> ck_coefficients(int K, const Real& sigma) {
    if (K < 0 || K > 40) throw InvalidOrder("ck_coefficients supports K in 0..40");
    const Prec p = sigma.prec();
    const int order = K + 6;
    // v(rho) = rho - i log(1 - i rho) = sum_{k>=2} i^{k+1} rho^k / k
    std::vector<Complex> vc(static_cast<size_t>(order), Complex::zero(p));
    for (int k = 2; k < order; ++k) vc[static_cast<size_t>(k)] = i_pow(k + 1, p) / Real::of(k, p);
    Jet v(std::move(vc));
    Jet rho = jet_reversion(v, K + 3);

    // f(lambda) = lambda (1 - i rho)^sigma / rho = (1 - i rho)^sigma / u,  rho = lambda u
    std::vector<Complex> uc(static_cast<size_t>(K + 2), Complex::zero(p));
    for (int k = 0; k < K + 2; ++k)
        if (k + 1 < rho.order()) uc[static_cast<size_t>(k)] = rho[k + 1];
    Jet u(std::move(uc));
    Jet w = Jet::constant(Complex::one(p), K + 2);
    for (int k = 1; k < K + 2 && k < rho.order(); ++k)
        w[k] = Complex(rho[k].im(), -rho[k].re());  // -i * rho_k
    Jet f = pow(w, Complex::from_real(sigma)) * reciprocal(u);
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) out.push_back(f[k]);
    return out;
}

std::vector<Complex> an_coefficients(const StripPoint& s, const Real& eta, int N) {
    if (N < 1) throw InvalidOrder("an_coefficients needs N >= 1");
    const Prec p = s.prec();
    Complex ieta = Complex(Real::of(0L, p), eta);
    Complex it_over_eta2 = Complex(Real::of(0L, p), s.t / (eta * eta));
    std::vector<Complex> a;
    a.reserve(static_cast<size_t>(N));
    a.push_back(Complex::one(p));
    for (int n = 0; n + 1 < N; ++n) {
        Complex rhs = a.back() * Complex::from_real(s.sigma - Real::of(n + 1, p));
        if (n >= 2) rhs -= it_over_eta2 * a[static_cast<size_t>(n - 2)];
        a.push_back(rhs / (ieta * static_cast<long>(n + 1)));
    }
    return a;
}

const Complex& PolylogTable::li(int m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    auto [pos, ok] = cache_.insert({m, polylog_unit(m, theta_, delta_)});
    return pos->second;
}

namespace {

// explicit single-n term e^{-n z - i t Log z} T_j(n, z)
Complex explicit_op_term(const SigmaRational& term, const Complex& z, long n, const Real& t) {
    Complex lz = log(z);
    Complex phase = exp(-(z * static_cast<long>(n)) - Complex(Real::of(0L, z.prec()), t) * lz);
    return phase * term.eval(z, n);
}

}  // namespace

Complex operator_sum(const StripPoint& s, const Real& eta, int N, OpSide side, long n_start,
                     PolylogTable& table, const Config& cfg) {
    if (N < 1 || N > 12) throw InvalidOrder("operator_sum supports N in 1..12");
    const Prec p = s.prec();
    const bool upper = (side == OpSide::upper);
    const int sgn = upper ? 1 : -1;
    const bool confluent = (eta == s.t);
    if (!confluent && !(eta > s.t))
        throw RegimeViolation("operator_sum needs eta >= t");
    if (confluent && !upper && n_start < 2)
        throw RegimeViolation("lower confluent sum starts at n = 2 (n = 1 is singular)");

    Real lneta = log(eta);
    Real half_pi = ldexp(pi_of(p), -1);
    // Log(z0) = ln eta +- i pi/2
    Complex logz0 = Complex(lneta, upper ? half_pi : -half_pi);
    Complex z0 = Complex(Real::of(0L, p), upper ? eta : -eta);
    // w = e^{-z0}: upper -> e^{-i eta}, lower -> e^{+i eta}
    auto li_w = [&](int m) { return upper ? conj(table.li(m)) : table.li(m); };

    Real x = s.t / eta;
    Real tol_m = Real::of(cfg.tol, p) * ldexp(Real::of(1L, p), -8);
    Real li_bound = abs(table.li(1)) + Real::of(2L, p);

    const long base_start = (confluent && !upper) ? 2 : 1;

    Complex acc = Complex::zero(p);
    SigmaRational term(s.sigma, s.t, PoleVariant::plus, p);
    for (int j = 0; j < N; ++j) {
        if (j > 0) term = sigma_rational_derive(term);
        const BivarPoly& P = term.numerator;
        const int k = term.pole_power;
        for (int cz = 0; cz <= P.zdeg(); ++cz) {
            for (int cn = 0; cn <= P.ndeg(); ++cn) {
                const Complex& v = P.at(cz, cn);
                if (v.is_zero()) continue;
                // z0^{1 - sigma + cz} / (sgn*i)^k / eta^k
                Complex zpow = exp(logz0 * Complex::from_real(Real::of(1 + cz, p) - s.sigma));
                Complex pref = v * zpow * i_pow(upper ? -k : k, p) * pow_si(Complex::from_real(eta), -k);
                Complex series = Complex::zero(p);
                if (!confluent) {
                    // sum_m C(k-1+m, m)(-sgn*x)^m Li_{(k-cn)+m}(w)
                    int l = k - cn;
                    Real xm = Real::of(1L, p);
                    Real binom = Real::of(1L, p);
                    for (int m = 0;; ++m) {
                        if (m > 0) {
                            binom = binom * Real::of(k - 1 + m, p) / Real::of(m, p);
                            xm *= (sgn > 0 ? -x : x);
                        }
                        Complex tterm = li_w(l + m) * (binom * xm);
                        series += tterm;
                        Real ratio = abs(xm) * binom * li_bound;
                        if (m > 2 && ratio < tol_m) break;
                        if (m > 2000) throw RegimeViolation("operator tail did not converge (x too close to 1)");
                    }
                } else {
                    // eta == t: (n z0 + i t) = sgn * i t (n + sgn), expand
                    // n^{cn} = sum_r C(cn, r) (n+sgn)^r (-sgn)^{cn-r};
                    // upper: sum_{n>=1} w^n/(n+1)^m = (Li_m(w) - w)/w, w = e^{-it}
                    // lower: sum_{n>=2} w^n/(n-1)^m = w Li_m(w),       w = e^{+it}
                    Complex w = upper ? conj(cis(s.t)) : cis(s.t);
                    for (int r = 0; r <= cn; ++r) {
                        long par = ((cn - r) % 2 == 0) ? 1 : -sgn;  // (-sgn)^{cn-r}
                        Real coef = binomial_real(cn, r, p) * Real::of(par, p);
                        int m = k - r;
                        Complex inner = upper ? (li_w(m) - w) / w : w * li_w(m);
                        series += inner * coef;
                    }
                }
                acc += pref * series;
            }
        }
    }
    // subtract explicitly the leading n-terms when the caller starts later
    if (n_start > base_start) {
        SigmaRational tj(s.sigma, s.t, PoleVariant::plus, p);
        for (int j = 0; j < N; ++j) {
            if (j > 0) tj = sigma_rational_derive(tj);
            for (long n = base_start; n < n_start; ++n) acc -= explicit_op_term(tj, z0, n, s.t);
        }
    }
    // the factor e^{-i t Log z0}, common to every n
    Complex outer = exp(Complex(Real::of(0L, p), -s.t) * logz0);
    return outer * acc;
}

Jet phi_series_coeffs(const StripPoint& s, const Real& eta, int K, const Config& cfg) {
    const Prec p = s.prec();
    require_lattice_distance(eta, cfg.delta_guard, "eta");
    Complex ss = s.s();
    Complex ieta = Complex(Real::of(0L, p), eta);
    long m1 = floor_long(s.t / eta);

    std::vector<Complex> g(static_cast<size_t>(K), Complex::zero(p));
    Complex ieta_inv_pow = Complex::one(p);
    for (int k = 1; k < K; ++k) {
        ieta_inv_pow /= ieta;
        long sign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k+1}
        g[static_cast<size_t>(k)] = (ss - 1L) * ieta_inv_pow * Real::of(sign, p) / Real::of(k, p);
    }
    if (K > 1) g[1] -= Real::of(m1, p);
    if (K > 2) g[2] -= Complex(Real::of(0L, p), s.t / (ldexp(eta * eta, 1)));
    Jet num = exp(Jet(std::move(g)));

    std::vector<Complex> d(static_cast<size_t>(K), Complex::zero(p));
    d[0] = Complex::one(p) - exp(-ieta);
    Real fact = Real::of(1L, p);
    for (int k = 1; k < K; ++k) {
        fact *= k;
        d[static_cast<size_t>(k)] = Complex::from_real(1L / fact);
    }
    return num / Jet(std::move(d));
}

Jet psi_series_coeffs(const StripPoint& s, const Real& eta, int K, const Config& cfg) {
    const Prec p = s.prec();
    Real mirror = Real::two_pi(p) * s.t / eta;
    require_lattice_distance(mirror, cfg.delta_guard, "2*pi*t/eta");
    Complex ss = s.s();
    // i eta / (2 pi t)
    Complex a = Complex(Real::of(0L, p), eta / (Real::two_pi(p) * s.t));
    long m2 = floor_long(eta / Real::two_pi(p));

    std::vector<Complex> g(static_cast<size_t>(K), Complex::zero(p));
    Complex apow = Complex::one(p);
    for (int k = 1; k < K; ++k) {
        apow *= a;
        long sign = (k % 2 == 1) ? 1 : -1;
        g[static_cast<size_t>(k)] = -(ss * apow) * Real::of(sign, p) / Real::of(k, p);
    }
    if (K > 1) g[1] -= Real::of(m2, p);
    if (K > 2) {
        Real denom = ldexp(pi_of(p) * pi_of(p) * s.t, 3);  // 8 pi^2 t
        g[2] += Complex(Real::of(0L, p), eta * eta / denom);
    }
    Jet num = exp(Jet(std::move(g)));

    std::vector<Complex> d(static_cast<size_t>(K), Complex::zero(p));
    d[0] = Complex::one(p) - cis(mirror);
    Real fact = Real::of(1L, p);
    for (int k = 1; k < K; ++k) {
        fact *= k;
        d[static_cast<size_t>(k)] = Complex::from_real(1L / fact);
    }
    return num / Jet(std::move(d));
}

// ---- predicted errors ------------------------------------------------------

namespace {
Real double_fact_odd(int N, Prec p) {
    // (2N+1)!!
    Real acc = Real::of(1L, p);
    for (int j = 1; 2 * j + 1 <= 2 * N + 1; ++j) acc *= (2 * j + 1);
    return acc;
}
}  // namespace

Real predicted_error_region1(const StripPoint& s, const Real& eta, int N, bool closed3) {
    const Prec p = s.prec();
    Real eps = eta / s.t - 1L;
    if (!(eps > 0L)) eps = Real::of(1e-9, p);
    Real ratio = pow((1L + eps) / eps, Real::of(2 * (N + 1), p));
    if (closed3) {
        // eta^{-sigma-3} (t^3 + ((1+eps)/eps)^8)
        return pow(eta, -(s.sigma + 3L)) * (pow_si(s.t, 3) + pow((1L + eps) / eps, Real::of(8L, p)));
    }
    return double_fact_odd(N, p) * Real::of(N, p) * ratio * pow(eta, -(s.sigma + Real::of(N, p)));
}

Real predicted_error_confluent(const StripPoint& s, int N, bool closed3) {
    const Prec p = s.prec();
    if (closed3) return pow(s.t, -(s.sigma + 3L));
    return double_fact_odd(N, p) * Real::of(N, p) * exp(Real::of(2 * (N + 1), p)) *
           pow(s.t, -(s.sigma + Real::of(N, p)));
}

Real predicted_error_small_eta(const StripPoint& s, const Real& eta, int N, const Config& cfg) {
    const Prec p = s.prec();
    Real pref = gamma_prefactor_mag(s) * pow(eta, s.sigma - 1L);
    Real Nr = Real::of(N, p);
    Real case_term(p);
    if (pow_si(eta, 3) < s.t) {
        case_term = pow(3L * Nr / s.t, Nr / 6L) * eta / sqrt(s.t);
    } else {
        Real A = Real::of(cfg.A_const, p);
        case_term = Nr * exp(-(A * s.t / (eta * eta))) +
                    pow(Nr * eta * eta / s.t, (Nr + 1L) / 2L);
    }
    return pref * case_term;
}

Real predicted_error_large_eta_mirror(const StripPoint& s, const Real& eta, int N,
                                      const Config& cfg) {
    const Prec p = s.prec();
    Real mirror = Real::two_pi(p) * s.t / eta;  // plays the role of eta
    Real pref = chi_gamma_prefactor_mag(s) * pow(eta / (Real::two_pi(p) * s.t), s.sigma);
    Real Nr = Real::of(N, p);
    Real case_term(p);
    if (pow_si(mirror, 3) < s.t) {
        case_term = pow(3L * Nr / s.t, Nr / 6L) * mirror / sqrt(s.t);
    } else {
        Real A = Real::of(cfg.A_const, p);
        case_term = Nr * exp(-(A * s.t / (mirror * mirror))) +
                    pow(Nr * mirror * mirror / s.t, (Nr + 1L) / 2L);
    }
    return pref * case_term;
}

Real predicted_error_sqrt_region(const StripPoint& s, const Real& eta, int N) {
    const Prec p = s.prec();
    Real Nr = Real::of(N, p);
    return gamma_prefactor_mag(s) * pow(3L * Nr / s.t, Nr / 6L) * pow(eta, s.sigma) / sqrt(s.t);
}

Real predicted_error_sqrt_mirror(const StripPoint& s, const Real& eta, int N) {
    const Prec p = s.prec();
    Real Nr = Real::of(N, p);
    Real mirror = Real::two_pi(p) * s.t / eta;
    return chi_gamma_prefactor_mag(s) * pow(3L * Nr / s.t, Nr / 6L) *
           pow(mirror, 1L - s.sigma) / sqrt(s.t);
}

// ---- region 1 ---------------------------------------------------------------

namespace {

void region1_strict_check(const StripPoint& s, const Real& eta, int N, const Config& cfg,
                          Regime regime) {
    ExpansionInput in{s, eta, N, 0.0, regime};
    in.epsilon_margin = 1e-9;
    if (auto v = validate_regime(in, cfg)) {
        if (cfg.strict_regimes) throw RegimeViolation(*v);
    }
}

}  // namespace

Complex region1_rest_closed3(const StripPoint& s, const Real& eta, const Config& cfg) {
    const Prec p = s.prec();
    Complex ss = s.s();
    PolylogTable table(eta, cfg.delta_guard);
    const Complex& li2 = table.li(2);
    const Complex& li3 = table.li(3);
    Complex one_m_eieta = Complex::one(p) - cis(eta);
    Real argv = arg(one_m_eieta);

    Complex br = Complex(Real::of(0L, p), -argv);
    br += Complex(s.t, -s.sigma) / eta * li2.re();
    Complex c3 = Complex(-(s.sigma - 1L) * s.t,
                         s.t * s.t - 3L * s.sigma * s.t - s.sigma * (s.sigma + 1L));
    br += c3 / (eta * eta) * li3.im();
    Complex pref = Complex::of(0L, 2L, p) * pow(eta, -ss) / pow(Real::two_pi(p), Complex::one(p) - ss);
    return pref * br;
}

Complex region1_rest_expansion(const StripPoint& s, const Real& eta, int N, const Config& cfg) {
    const Prec p = s.prec();
    Complex ss = s.s();
    PolylogTable table(eta, cfg.delta_guard);
    Complex up = operator_sum(s, eta, N, OpSide::upper, 1, table, cfg);
    Complex low = operator_sum(s, eta, N, OpSide::lower, 1, table, cfg);
    Complex half_ipi = Complex(Real::of(0L, p), ldexp(pi_of(p), -1));
    Complex pref_up = exp(-(half_ipi * (Complex::one(p) - ss))) / pow(Real::two_pi(p), Complex::one(p) - ss);
    Complex pref_low = exp(half_ipi * (Complex::one(p) - ss)) / pow(Real::two_pi(p), Complex::one(p) - ss);
    return pref_up * up + pref_low * low;
}

EvalResult zeta_region1_expansion(const StripPoint& s, const Real& eta, int N, const Config& cfg) {
    const Prec p = s.prec();
    if (N < 2) throw InvalidOrder("needs N >= 2");
    region1_strict_check(s, eta, N, cfg, Regime::region1);
    require_lattice_distance(eta, cfg.delta_guard, "eta");
    EvalResult out(p);
    Complex ss = s.s();
    long m = floor_long(eta / Real::two_pi(p));
    out.add_term("main_sum", power_sum_minus_s(1, m, ss));
    Complex pow_term = -(pow(eta / Real::two_pi(p), Complex::one(p) - ss) / (Complex::one(p) - ss));
    out.add_term("power_term", pow_term);
    out.add_term("expansion", region1_rest_expansion(s, eta, N, cfg));
    out.predicted_error_mag = predicted_error_region1(s, eta, N, false);
    return out;
}

EvalResult zeta_region1(const StripPoint& s, const Real& eta, int N, const Config& cfg) {
    if (N != 3) return zeta_region1_expansion(s, eta, N, cfg);
    const Prec p = s.prec();
    region1_strict_check(s, eta, N, cfg, Regime::region1);
    require_lattice_distance(eta, cfg.delta_guard, "eta");
    EvalResult out(p);
    Complex ss = s.s();
    long m = floor_long(eta / Real::two_pi(p));
    out.add_term("main_sum", power_sum_minus_s(1, m, ss));
    Complex pow_term = -(pow(eta / Real::two_pi(p), Complex::one(p) - ss) / (Complex::one(p) - ss));
    out.add_term("power_term", pow_term);
    out.add_term("polylog_bracket", region1_rest_closed3(s, eta, cfg));
    out.predicted_error_mag = predicted_error_region1(s, eta, 3, true);
    return out;
}

// ---- confluent --------------------------------------------------------------

Complex confluent_rest(const StripPoint& s, int N, const Config& cfg) {
    const Prec p = s.prec();
    Complex ss = s.s();
    PolylogTable table(s.t, cfg.delta_guard);
    Complex up = operator_sum(s, s.t, N, OpSide::upper, 1, table, cfg);
    Complex low = operator_sum(s, s.t, N, OpSide::lower, 2, table, cfg);
    Complex half_ipi = Complex(Real::of(0L, p), ldexp(pi_of(p), -1));
    Complex pref_up = exp(-(half_ipi * (Complex::one(p) - ss))) / pow(Real::two_pi(p), Complex::one(p) - ss);
    Complex pref_low = exp(half_ipi * (Complex::one(p) - ss)) / pow(Real::two_pi(p), Complex::one(p) - ss);
    Complex acc = pref_up * up + pref_low * low;

    // + (t/2 pi)^{1-s} e^{it} sum_{k=0}^{2N} conj(c_k(1-sigma)) Gamma((k+1)/2) / t^{(k+1)/2}
    std::vector<Complex> ck = ck_coefficients(2 * N, 1L - s.sigma);
    std::vector<Real> gh = gamma_half_table(2 * N, p);
    Real rt = sqrt(s.t);
    Real tpow = rt;  // t^{(k+1)/2} at k = 0
    Complex cksum = Complex::zero(p);
    for (int k = 0; k <= 2 * N; ++k) {
        cksum += conj(ck[static_cast<size_t>(k)]) * (gh[static_cast<size_t>(k)] / tpow);
        tpow *= rt;
    }
    acc += pow(s.t / Real::two_pi(p), Complex::one(p) - ss) * cis(s.t) * cksum;
    return acc;
}

EvalResult zeta_confluent(const StripPoint& s, int N, const Config& cfg) {
    const Prec p = s.prec();
    if (N < 2) throw InvalidOrder("needs N >= 2");
    require_lattice_distance(s.t, cfg.delta_guard, "t");
    EvalResult out(p);
    Complex ss = s.s();
    long m = floor_long(s.t / Real::two_pi(p));
    out.add_term("main_sum", power_sum_minus_s(1, m, ss));
    Complex pow_term = -(pow(s.t / Real::two_pi(p), Complex::one(p) - ss) / (Complex::one(p) - ss));
    out.add_term("power_term", pow_term);
    out.add_term("expansion", confluent_rest(s, N, cfg));
    out.predicted_error_mag = predicted_error_confluent(s, N, N == 3);
    return out;
}

Complex confluent_rest_closed3(const StripPoint& s, const Config& cfg) {
    const Prec p = s.prec();
    Complex ss = s.s();
    const Real& t = s.t;
    const Real& sg = s.sigma;
    PolylogTable table(t, cfg.delta_guard);
    Complex eit = cis(t);
    Complex emit = conj(eit);
    Real t2 = t * t;

    // first bracket
    Complex br1 = emit / (2L * t2) *
                  Complex(-t2 + (sg - 1L) * (sg - 1L), -(t * (sg - 1L)));
    br1 += Complex(Real::of(0L, p), -table.li(1).im());
    br1 += Complex(Real::of(0L, p), sg / t) * table.li(2).re();
    br1 += Complex(-t / t2, (sg + sg * sg) / t2) * table.li(3).im();
    br1 += Complex((2L + 3L * sg) / t2, Real::of(0L, p)) * table.li(4).re();
    br1 += Complex(Real::of(0L, p), 3L / t2) * table.li(5).im();

    // second bracket
    Real rpi = sqrt(pi_of(p));
    Real rt = sqrt(t);
    Complex br2 = Complex(Real::of(0.5, p), Real::of(0.5, p)) * (rpi * rt);
    br2 += Complex(Real::of(0L, p), -(3L * sg - 2L) / 3L);
    br2 += Complex(Real::of(-1L, p), Real::of(1L, p)) *
           (rpi * (6L * sg * sg - 6L * sg + 1L) / (24L * rt));
    br2 += Complex::from_real((45L * sg * sg * sg - 45L * sg * sg + 4L) / (135L * t));
    br2 += Complex(Real::of(-1L, p), Real::of(-1L, p)) *
           (rpi * (36L * pow_si(sg, 4) - 24L * pow_si(sg, 3) - 24L * sg * sg + 12L * sg + 1L) /
            (576L * t * rt));
    br2 += Complex(Real::of(0L, p),
                   (189L * pow_si(sg, 5) - 315L * pow_si(sg, 3) + 42L * sg * sg + 84L * sg - 8L) /
                       (2835L * t2));
    br2 += Complex(Real::of(1L, p), Real::of(-1L, p)) *
           (rpi *
            (1080L * pow_si(sg, 6) + 1080L * pow_si(sg, 5) - 2700L * pow_si(sg, 4) -
             1440L * pow_si(sg, 3) + 1710L * sg * sg + 270L * sg - 139L) /
            (103680L * t2 * rt));

    Complex pref = pow(t, -ss) * eit / pow(Real::two_pi(p), Complex::one(p) - ss);
    return pref * (Complex::of(0L, -2L, p) * br1 + br2);
}

EvalResult zeta_confluent_closed3(const StripPoint& s, const Config& cfg) {
    const Prec p = s.prec();
    require_lattice_distance(s.t, cfg.delta_guard, "t");
    EvalResult out(p);
    Complex ss = s.s();
    long m = floor_long(s.t / Real::two_pi(p));
    out.add_term("main_sum", power_sum_minus_s(1, m, ss));
    Complex pow_term = -(pow(s.t / Real::two_pi(p), Complex::one(p) - ss) / (Complex::one(p) - ss));
    out.add_term("power_term", pow_term);
    out.add_term("polylog_bracket", confluent_rest_closed3(s, cfg));
    out.predicted_error_mag = predicted_error_confluent(s, 3, true);
    return out;
}

// ---- steepest-descent regimes (section-4 style) -----------------------------

namespace {

void add_main_sums(EvalResult& out, const StripPoint& s, const Real& eta) {
    const Prec p = s.prec();
    Complex ss = s.s();
    long m1 = floor_long(s.t / eta);
    long m2 = floor_long(eta / Real::two_pi(p));
    out.add_term("dirichlet_sum", power_sum_minus_s(1, m1, ss));
    out.add_term("reflected_sum", chi(ss) * power_sum_s_minus_1(1, m2, ss));
}

void strict_check(const StripPoint& s, const Real& eta, int N, const Config& cfg, Regime r) {
    ExpansionInput in{s, eta, N, 0.05, r};
    if (auto v = validate_regime(in, cfg)) {
        if (cfg.strict_regimes) throw RegimeViolation(*v);
    }
}

}  // namespace

EvalResult zeta_small_eta(const StripPoint& s, const Real& eta, int N, const Config& cfg) {
    const Prec p = s.prec();
    strict_check(s, eta, N, cfg, Regime::small_eta);
    EvalResult out(p);
    Complex ss = s.s();
    add_main_sums(out, s, eta);

    int K = (N - 1) / 2;
    Jet phi = phi_series_coeffs(s, eta, 2 * K + 1, cfg);
    std::vector<Real> gh = gamma_half_table(2 * K, p);
    Real two_eta2_over_t = ldexp(eta * eta, 1) / s.t;
    Complex S = Complex::zero(p);
    for (int k = 0; k <= K; ++k) {
        Real fac = pow(two_eta2_over_t, Real::of(k, p) + Real::of(0.5, p)) *
                   gh[static_cast<size_t>(2 * k)];
        S += phi[2 * k] * i_pow(k, p) * fac;
    }
    long m1 = floor_long(s.t / eta);
    Complex ipi = Complex(Real::of(0L, p), pi_of(p));
    Complex pref = -(exp(-(ipi * ss)) * gamma_fn(Complex::one(p) - ss)) /
                   (Complex::of(0L, 2L, p) * pi_of(p));
    pref *= cis(-(Real::of(m1 + 1, p) * eta));
    pref *= exp(ipi * (ss - 1L) / 2L);
    pref *= pow(eta, ss - 1L);
    pref *= cis(ldexp(pi_of(p), -2));
    out.add_term("saddle_term", pref * S);
    out.predicted_error_mag = predicted_error_small_eta(s, eta, N, cfg);
    return out;
}

EvalResult zeta_large_eta_mirror(const StripPoint& s, const Real& eta, int N, const Config& cfg) {
    const Prec p = s.prec();
    strict_check(s, eta, N, cfg, Regime::large_eta_mirror);
    EvalResult out(p);
    Complex ss = s.s();
    add_main_sums(out, s, eta);

    int K = (N - 1) / 2;
    Jet psi = psi_series_coeffs(s, eta, 2 * K + 1, cfg);
    std::vector<Real> gh = gamma_half_table(2 * K, p);
    Real mirror = Real::two_pi(p) * s.t / eta;  // 2 pi t / eta
    Real fac_base = ldexp(pi_of(p) * pi_of(p), 3) * s.t / (eta * eta);  // 8 pi^2 t / eta^2
    Complex S = Complex::zero(p);
    for (int k = 0; k <= K; ++k) {
        Real fac = pow(fac_base, Real::of(k, p) + Real::of(0.5, p)) * gh[static_cast<size_t>(2 * k)];
        S += psi[2 * k] * i_pow(-k, p) * fac;
    }
    long m2 = floor_long(eta / Real::two_pi(p));
    Complex ipi = Complex(Real::of(0L, p), pi_of(p));
    Complex pref = chi(ss) * exp(ipi * (Complex::one(p) - ss)) * gamma_fn(ss) /
                   (Complex::of(0L, 2L, p) * pi_of(p));
    pref *= cis(Real::of(m2 + 1, p) * mirror);
    pref *= exp(ipi * ss / 2L);
    pref *= pow(mirror, -ss);
    pref *= cis(-ldexp(pi_of(p), -2));
    out.add_term("saddle_term", pref * S);
    out.predicted_error_mag = predicted_error_large_eta_mirror(s, eta, N, cfg);
    return out;
}

namespace {

std::optional<std::pair<long, long>> detect_tau_rational(const Real& tau) {
    const Prec p = tau.prec();
    Real thresh = ldexp(Real::of(1L, p), -(static_cast<long>(p) / 2));
    for (long q = 1; q <= 200; ++q) {
        Real x = tau * Real::of(q, p);
        Real r(p);
        mpfr_round(r.raw(), x.raw());
        if (abs(x - r) < thresh && r < 0L) {
            long num = -r.to_long();
            if (num > 0) return std::make_pair(num, q);
        }
    }
    return std::nullopt;
}

// S_N(s, eta) built from a_n, binomials, and the Phi jet
Complex assemble_sn(const StripPoint& s, const Real& eta, int N, const Config& cfg,
                    std::optional<std::pair<long, long>> tau_rational) {
    const Prec p = s.prec();
    Real two_pi = Real::two_pi(p);
    long m1 = floor_long(s.t / eta);
    long m2 = floor_long(eta / two_pi);
    Real tau = -(two_pi * s.t / (eta * eta));
    Real u0 = 2L * s.t / eta - (two_pi * s.t / (eta * eta)) * Real::of(m2, p) -
              Real::of(m1, p) - Real::of(0.5, p);

    if (!tau_rational) tau_rational = detect_tau_rational(tau);
    PhiArg arg(tau, Complex::from_real(u0));
    if (tau_rational) arg.rational = PhiArg::Rational{tau_rational->first, tau_rational->second};
    Jet phi = phi_jet(arg, N, cfg);

    std::vector<Complex> dphi;  // actual derivatives, k! * coeff
    Real fact = Real::of(1L, p);
    for (int k = 0; k < N; ++k) {
        if (k > 1) fact *= k;
        dphi.push_back(phi[k] * fact);
    }

    std::vector<Complex> an = an_coefficients(s, eta, N);
    Complex B = Complex(Real::of(0L, p), two_pi * Real::of(m2, p) - eta);  // 2 m2 pi i - i eta
    Complex S = Complex::zero(p);
    for (int n = 0; n < N; ++n) {
        Complex Bk = Complex::one(p);
        for (int k = 0; k <= n; ++k) {
            S += an[static_cast<size_t>(n)] * binomial_real(n, k, p) * Bk *
                 dphi[static_cast<size_t>(n - k)];
            Bk *= B;
        }
    }
    return S;
}

}  // namespace

Complex sqrt_region_boundary_term(const StripPoint& s, const Real& eta, int N, const Config& cfg,
                                  std::optional<std::pair<long, long>> tau_rational) {
    const Prec p = s.prec();
    Real two_pi = Real::two_pi(p);
    Complex ss = s.s();
    long m2 = floor_long(eta / two_pi);
    Complex S = assemble_sn(s, eta, N, cfg, tau_rational);
    // phase E = exp(i [ (2t/eta) m2 pi - t - (t/(2 eta^2)) (2 m2 pi - eta)^2 ])
    Real gap = two_pi * Real::of(m2, p) - eta;
    Real phase = 2L * s.t / eta * Real::of(m2, p) * pi_of(p) - s.t -
                 s.t / (ldexp(eta * eta, 1)) * gap * gap;
    Complex ipi = Complex(Real::of(0L, p), pi_of(p));
    Complex pref = exp(-(ipi * ss)) * gamma_fn(Complex::one(p) - ss);
    pref *= exp(ipi * (ss - 1L) / 2L);
    pref *= pow(eta, ss - 1L);
    pref *= cis(phase);
    return pref * S;
}

EvalResult zeta_sqrt_region(const StripPoint& s, const Real& eta, int N, const Config& cfg,
                            std::optional<std::pair<long, long>> tau_rational) {
    const Prec p = s.prec();
    strict_check(s, eta, N, cfg, Regime::sqrt_region);
    EvalResult out(p);
    add_main_sums(out, s, eta);
    out.add_term("boundary_term", sqrt_region_boundary_term(s, eta, N, cfg, tau_rational));
    out.predicted_error_mag = predicted_error_sqrt_region(s, eta, N);
    return out;
}

EvalResult zeta_sqrt_mirror(const StripPoint& s, const Real& eta, int N, const Config& cfg) {
    const Prec p = s.prec();
    strict_check(s, eta, N, cfg, Regime::sqrt_mirror);
    EvalResult out(p);
    Complex ss = s.s();
    add_main_sums(out, s, eta);

    Real two_pi = Real::two_pi(p);
    Real mirror_eta = two_pi * s.t / eta;
    StripPoint s_mirror(1L - s.sigma, s.t);
    Complex S = conj(assemble_sn(s_mirror, mirror_eta, N, cfg, std::nullopt));

    long m1 = floor_long(s.t / eta);
    Real gap = Real::of(m1, p) - s.t / eta;
    Real phase = -(eta * Real::of(m1, p)) + s.t + eta * eta / (ldexp(s.t, 1)) * gap * gap;
    Complex ipi = Complex(Real::of(0L, p), pi_of(p));
    Complex pref = chi(ss) * exp(ipi * (Complex::one(p) - ss)) * gamma_fn(ss);
    pref *= exp(ipi * ss / 2L);
    pref *= pow(eta / (two_pi * s.t), ss);
    pref *= cis(phase);
    out.add_term("boundary_term", pref * S);
    out.predicted_error_mag = predicted_error_sqrt_mirror(s, eta, N);
    return out;
}

}  // namespace za
