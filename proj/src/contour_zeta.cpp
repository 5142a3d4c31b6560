#include "za/contour_zeta.hpp"

#include <cmath>
#include <vector>

#include "za/special.hpp"

namespace za {

Complex power_sum_s_minus_1(long a, long b, const Complex& s) {
    Complex acc = Complex::zero(s.prec());
    Complex e = s - 1L;
    for (long n = a; n <= b; ++n) acc += n_power(n, e);
    return acc;
}

Complex power_sum_minus_s(long a, long b, const Complex& s) {
    Complex acc = Complex::zero(s.prec());
    Complex e = -s;
    for (long n = a; n <= b; ++n) acc += n_power(n, e);
    return acc;
}

namespace {

// prefactored ray integrand: pref * e^{-z} z^{s-1} / (1 - e^{-z});
// the prefactors e^{+-i pi s/2} have magnitude e^{-+pi t/2}, so folding them in
// keeps the integrated quantity at the final scale and the absolute tolerance
// meaningful.
Integrand ray_integrand(const Complex& s, const Complex& pref) {
    return [s, pref](const Complex& z) {
        Complex em = exp(-z);
        return pref * em * pow(z, s - 1L) / (Complex::one(z.prec()) - em);
    };
}

// the hump on the upper ray peaks before r ~ pi t / 2 when t > eta
double upper_ray_min_length(const Complex& s, const Real& eta) {
    double t = s.im().to_double();
    double e = eta.to_double();
    if (t <= e || t <= 0) return 0.0;
    return 3.141592653589793 * t / 2.0 + 0.8 * static_cast<double>(s.prec()) + 16.0;
}

}  // namespace

std::pair<Complex, Complex> gl_gu(const Complex& s, const Real& eta, const Config& cfg,
                                  double phi1, double phi2) {
    const Prec p = s.prec();
    require_lattice_distance(eta, cfg.delta_guard, "eta");
    Complex half_ipi_s = Complex(Real::of(0L, p), ldexp(Real::pi(p), -1)) * s;
    Complex two_pi_ms = pow(Real::two_pi(p), -s);
    Complex pref_l = exp(half_ipi_s) * two_pi_ms;
    Complex pref_u = exp(-half_ipi_s) * two_pi_ms;

    QuadratureOptions opt;
    opt.tol = cfg.tol;

    RayPath lower{Complex(Real::of(0L, p), -eta), Real::of(phi1, p), Real::of(0L, p)};
    QuadratureResult rl = integrate_ray(ray_integrand(s, pref_l), lower, opt);

    QuadratureOptions opt_u = opt;
    opt_u.min_length = upper_ray_min_length(s, eta);
    RayPath upper{Complex(Real::of(0L, p), eta), Real::of(phi2, p), Real::of(0L, p)};
    QuadratureResult ru = integrate_ray(ray_integrand(s, pref_u), upper, opt_u);

    return {rl.value, ru.value};
}

ZetaExactResult zeta_exact(const Complex& s, const Real& eta, const Config& cfg,
                           double phi1, double phi2) {
    const Prec p = s.prec();
    require_lattice_distance(eta, cfg.delta_guard, "eta");
    auto [gl, gu] = gl_gu(s, eta, cfg, phi1, phi2);

    long m = floor_long(eta / Real::two_pi(p));
    Complex braces = power_sum_s_minus_1(1, m, s);
    braces -= pow(eta, s) / (s * pow(Real::two_pi(p), s));
    braces += gl + gu;

    ZetaExactResult out{chi(s) * braces, braces, Real::of(cfg.tol, p)};
    return out;
}

ZetaExactResult zeta_exact(const StripPoint& s, const Real& eta, const Config& cfg,
                           double phi1, double phi2) {
    return zeta_exact(s.s(), eta, cfg, phi1, phi2);
}

BasicSumPair basic_sum_semicircle(const StripPoint& s, const Real& eta, const Real& t_hi,
                                  const Config& cfg) {
    const Prec p = s.prec();
    if (!(eta > 0L) || !(eta < t_hi)) throw RegimeViolation("needs 0 < eta < t_hi");
    require_lattice_distance(eta, cfg.delta_guard, "eta");
    require_lattice_distance(t_hi, cfg.delta_guard, "t_hi");

    Complex ss = s.s();
    Complex pref = exp(Complex(Real::of(0L, p), -ldexp(Real::pi(p), -1)) * ss) /
                   pow(Real::two_pi(p), ss);
    Integrand f = [ss, pref](const Complex& z) {
        return pref * pow(z, ss - 1L) / (exp(z) - Complex::one(z.prec()));
    };
    QuadratureOptions opt;
    opt.tol = cfg.tol;
    SemicirclePath right{eta, t_hi, SemicirclePath::Side::right};
    SemicirclePath left{eta, t_hi, SemicirclePath::Side::left};
    QuadratureResult r = integrate_semicircle(f, right, p, opt);
    QuadratureResult l = integrate_semicircle(f, left, p, opt);
    return {r.value, l.value, r.error_estimate + l.error_estimate};
}


namespace {

// split [a, b] on the real axis so each piece carries at most ~8 radians of
// the t*ln(u) phase
void oscillation_cuts(std::vector<Real>& cuts, const Real& a, const Real& b, const Real& t) {
    const Prec p = a.prec();
    double phase = t.to_double() * (std::log(b.to_double()) - std::log(a.to_double()));
    int pieces = std::max(1, static_cast<int>(std::ceil(phase / 8.0)));
    for (int k = 1; k < pieces; ++k) {
        Real x = a * pow(b / a, Real::of(k, p) / Real::of(pieces, p));
        cuts.push_back(x);
    }
}

Complex integrate_real_segments(const Integrand& f, std::vector<Real> cuts, Real& err,
                                const QuadratureOptions& opt) {
    const Prec p = cuts[0].prec();
    Complex total = Complex::zero(p);
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        QuadratureResult seg = integrate_segment(f, Complex::from_real(cuts[k]),
                                                 Complex::from_real(cuts[k + 1]), opt);
        total += seg.value;
        err += seg.error_estimate;
    }
    return total;
}

}  // namespace

QuadratureResult basic_sum_pv(const StripPoint& s, const Real& eta, const Real& t_hi,
                              const Config& cfg) {
    const Prec p = s.prec();
    if (!(eta > 0L) || !(eta < t_hi)) throw RegimeViolation("needs 0 < eta < t_hi");
    require_lattice_distance(eta, cfg.delta_guard, "eta");
    require_lattice_distance(t_hi, cfg.delta_guard, "t_hi");

    Complex ss = s.s();
    Real two_pi = Real::two_pi(p);
    Complex pref = Complex::of(2L, 0L, p) / pow(two_pi, ss);
    Integrand f = [ss, pref](const Complex& z) {
        Complex iz = Complex(-z.im(), z.re());
        return pref * pow(z, ss - 1L) / (exp(iz) - Complex::one(z.prec()));
    };
    QuadratureOptions opt;
    opt.tol = cfg.tol;

    long n_lo = floor_long(eta / two_pi) + 1;
    long n_hi = floor_long(t_hi / two_pi);

    // window half-width: 1e-2 of the smallest gap between division points
    Real gap = two_pi;
    {
        Real d1 = dist_to_multiple(eta, two_pi);
        Real d2 = dist_to_multiple(t_hi, two_pi);
        if (d1 < gap) gap = d1;
        if (d2 < gap) gap = d2;
    }
    Real h = gap * Real::of(1e-2, p);

    Complex total = Complex::zero(p);
    Real err = Real::of(0L, p);
    Real cursor = eta;
    for (long n = n_lo; n <= n_hi; ++n) {
        Real pole = two_pi * Real::of(n, p);
        {
            std::vector<Real> cuts{cursor};
            oscillation_cuts(cuts, cursor, pole - h, s.t);
            cuts.push_back(pole - h);
            total += integrate_real_segments(f, std::move(cuts), err, opt);
        }
        // window: integrand minus the first Laurent term pole^{s-1}/(i(rho-pole));
        // the subtracted odd part integrates to zero over the symmetric window.
        Complex res = pref * pow(Complex::from_real(pole), ss - 1L);
        Integrand reg = [&](const Complex& z) {
            Complex iz = Complex(-z.im(), z.re());
            Complex d = z - pole;
            Complex idz = Complex(-d.im(), d.re());
            return pref * pow(z, ss - 1L) / (exp(iz) - Complex::one(z.prec())) - res / idz;
        };
        QuadratureResult win = integrate_segment(reg, Complex::from_real(pole - h),
                                                 Complex::from_real(pole + h), opt);
        total += win.value;
        err += win.error_estimate;
        cursor = pole + h;
    }
    {
        std::vector<Real> cuts{cursor};
        oscillation_cuts(cuts, cursor, t_hi, s.t);
        cuts.push_back(t_hi);
        total += integrate_real_segments(f, std::move(cuts), err, opt);
    }
    return {total, err};
}

QuadratureResult basic_sum_rotated(const StripPoint& s, const Real& eta, const Real& t_hi,
                                   double eps, const Config& cfg) {
    const Prec p = s.prec();
    if (!(eps >= 0.0) || eps >= 1.0) throw RegimeViolation("needs 0 <= eps < 1");
    if (!(eta > 0L) || !(eta < t_hi)) throw RegimeViolation("needs 0 < eta < t_hi");
    require_lattice_distance(eta, cfg.delta_guard, "eta");
    require_lattice_distance(t_hi, cfg.delta_guard, "t_hi");

    Complex ss = s.s();
    Real two_pi = Real::two_pi(p);
    Real epsr = Real::of(eps, p);
    Complex rot = cis(-epsr);  // e^{-i eps}
    Complex pref = exp(-(Complex(Real::of(0L, p), epsr) * ss)) / pow(two_pi, ss);
    Integrand f = [ss, rot, pref](const Complex& u) {
        Complex iu = Complex(-u.im(), u.re()) * rot;  // i u e^{-i eps}
        return pref * pow(u, ss - 1L) / (exp(iu) - Complex::one(u.prec()));
    };
    QuadratureOptions opt;
    opt.tol = cfg.tol;

    // split at the near-pole abscissas to help the refinement
    std::vector<Real> cuts;
    cuts.push_back(eta);
    long n_lo = floor_long(eta / two_pi) + 1;
    long n_hi = floor_long(t_hi / two_pi);
    double c = std::cos(eps);
    for (long n = n_lo; n <= n_hi; ++n) {
        Real x = two_pi * Real::of(n, p) / Real::of(c, p);
        if (x > eta && x < t_hi) cuts.push_back(x);
    }
    cuts.push_back(t_hi);

    Complex total = Complex::zero(p);
    Real err = Real::of(0L, p);
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        std::vector<Real> sub{cuts[k]};
        oscillation_cuts(sub, cuts[k], cuts[k + 1], s.t);
        sub.push_back(cuts[k + 1]);
        total += integrate_real_segments(f, std::move(sub), err, opt);
    }
    return {total, err};
}

}  // namespace za
