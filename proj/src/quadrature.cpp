#include "za/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace za {

namespace {

struct GlRule {
    std::vector<Real> nodes;    // on (-1, 1)
    std::vector<Real> weights;
};

std::mutex g_gl_mutex;
std::map<std::pair<int, Prec>, GlRule> g_gl_cache;

// Legendre P_n and P_n' at x by recurrence.
void legendre(int n, const Real& x, Real& pn, Real& dpn) {
    const Prec p = x.prec();
    Real p0 = Real::of(1L, p), p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real pk = (Real::of(2 * k - 1, p) * x * p1 - Real::of(k - 1, p) * p0) / Real::of(k, p);
        p0 = p1;
        p1 = pk;
    }
    pn = p1;
    dpn = Real::of(n, p) * (x * p1 - p0) / (x * x - 1L);
}

const GlRule& gl_rule(int n, Prec prec) {
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find({n, prec});
    if (it != g_gl_cache.end()) return it->second;

    GlRule rule;
    rule.nodes.reserve(static_cast<size_t>(n));
    rule.weights.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        double guess = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        Real x = Real::of(guess, prec);
        Real pn(prec), dpn(prec);
        for (int iter = 0; iter < 128; ++iter) {
            legendre(n, x, pn, dpn);
            Real dx = pn / dpn;
            x -= dx;
            if (abs(dx) < ldexp(Real::of(1L, prec), -(static_cast<long>(prec) - 4))) break;
        }
        legendre(n, x, pn, dpn);
        Real w = 2L / ((1L - x * x) * dpn * dpn);
        rule.nodes.push_back(x);
        rule.weights.push_back(w);
    }
    auto [pos, ok] = g_gl_cache.insert({{n, prec}, std::move(rule)});
    return pos->second;
}

// single-panel GL approximation of int_a^b f(z) dz along the straight segment
Complex gl_panel(const Integrand& f, const Complex& a, const Complex& b, int n, Prec prec) {
    const GlRule& rule = gl_rule(n, prec);
    Complex mid = (a + b) / 2L;
    Complex half = (b - a) / 2L;
    Complex acc = Complex::zero(prec);
    for (int k = 0; k < n; ++k) {
        Complex z = mid + half * rule.nodes[static_cast<size_t>(k)];
        acc += f(z) * rule.weights[static_cast<size_t>(k)];
    }
    return acc * half;
}

void adaptive(const Integrand& f, const Complex& a, const Complex& b, const Complex& whole,
              const Real& tol, int depth, const QuadratureOptions& opt, Complex& sum, Real& err) {
    const Prec prec = a.prec();
    Complex mid = (a + b) / 2L;
    Complex left = gl_panel(f, a, mid, opt.points, prec);
    Complex right = gl_panel(f, mid, b, opt.points, prec);
    Complex finer = left + right;
    Real delta = abs(finer - whole);
    if ((delta <= tol && depth >= opt.min_depth) || depth >= opt.max_depth) {
        if (depth >= opt.max_depth && delta > tol * 16L)
            throw QuadratureFailure("panel did not converge at depth " + std::to_string(depth) +
                                    ", local error " + delta.str(4));
        sum += finer;
        err += delta;
        return;
    }
    Real half_tol = ldexp(tol, -1);
    adaptive(f, a, mid, left, half_tol, depth + 1, opt, sum, err);
    adaptive(f, mid, b, right, half_tol, depth + 1, opt, sum, err);
}

}  // namespace

QuadratureResult integrate_segment(const Integrand& f, const Complex& a, const Complex& b,
                                   const QuadratureOptions& opt) {
    const Prec prec = a.prec();
    Complex whole = gl_panel(f, a, b, opt.points, prec);
    Complex sum = Complex::zero(prec);
    Real err = Real::of(0L, prec);
    adaptive(f, a, b, whole, Real::of(opt.tol, prec), 0, opt, sum, err);
    return {sum, err};
}

QuadratureResult integrate_arc(const Integrand& f, const Complex& center, const Real& radius,
                               const Real& th0, const Real& th1, const QuadratureOptions& opt) {
    const Prec prec = center.prec();
    // pull the parametrization into a segment integral over [th0, th1] on the real line
    Integrand g = [&](const Complex& th) {
        Complex e = cis(th.re());
        Complex z = center + e * radius;
        return f(z) * Complex(Real::of(0L, prec), radius) * e;  // dz = i r e^{i th} d th
    };
    return integrate_segment(g, Complex::from_real(th0), Complex::from_real(th1), opt);
}

QuadratureResult integrate_ray(const Integrand& f, RayPath& path, const QuadratureOptions& opt) {
    const Prec prec = path.start.prec();
    Complex dir = cis(path.direction_angle);
    Real tol = Real::of(opt.tol, prec);
    Real panel_tol = ldexp(tol, -3);
    Real small = tol * Real::of(1e-3, prec);

    Complex total = Complex::zero(prec);
    Real err = Real::of(0L, prec);
    Real r = Real::of(0L, prec);
    Real len = Real::of(1L, prec);
    int consecutive_small = 0;
    bool settled = false;
    Real min_len = Real::of(opt.min_length, prec);

    for (int k = 0; k < opt.max_panels; ++k) {
        Complex a = path.start + dir * r;
        Complex b = path.start + dir * (r + len);
        QuadratureOptions seg_opt = opt;
        seg_opt.tol = opt.tol / 256.0;
        seg_opt.min_depth = 1;
        QuadratureResult seg = integrate_segment(f, a, b, seg_opt);
        total += seg.value;
        err += seg.error_estimate;
        r += len;
        if (abs(seg.value) < small) {
            if (++consecutive_small >= 3 && r >= min_len) {
                // decay-rate tail bound from the envelope at the last panel ends
                Real m1 = abs(f(a));
                Real m2 = abs(f(b));
                if (m2.is_zero()) { settled = true; break; }
                if (m1 > m2) {
                    Real kappa = log(m1 / m2) / len;
                    if (kappa > Real::of(0.05, prec)) {
                        err += m2 / kappa;
                        settled = true;
                        break;
                    }
                }
                // not visibly decaying yet: keep going
                consecutive_small = 0;
            }
        } else {
            consecutive_small = 0;
        }
        if (k > 8) len *= Real::of(1.5, prec);
    }
    path.truncation_radius = r;
    if (!settled) throw QuadratureFailure("ray integral did not settle within panel budget");
    return {total, err};
}

QuadratureResult integrate_semicircle(const Integrand& f, const SemicirclePath& path, Prec prec,
                                      const QuadratureOptions& opt) {
    Real half = ldexp(path.high - path.low, -1);
    Complex center = Complex(Real::of(0L, prec), ldexp(path.high + path.low, -1));
    Real pi_half = ldexp(Real::pi(prec), -1);
    Real th0 = path.side == SemicirclePath::Side::right ? -pi_half : pi_half;
    Real th1 = path.side == SemicirclePath::Side::right ? pi_half : pi_half * 3L;

    // the integrands peak in boundary layers of angular width ~1/radius at the
    // endpoints; grade the panels geometrically toward both ends so the
    // refinement cannot step over them
    int K = std::max(8, static_cast<int>(std::ceil(std::log2(std::max(
                            2.0, half.to_double())))) + 6);
    std::vector<Real> cuts;
    Real range = th1 - th0;
    cuts.push_back(th0);
    for (int k = K; k >= 1; --k) cuts.push_back(th0 + ldexp(range, -k));
    for (int k = 1; k <= K; ++k) cuts.push_back(th1 - ldexp(range, -k));
    cuts.push_back(th1);

    Complex total = Complex::zero(prec);
    Real err = Real::of(0L, prec);
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        QuadratureResult seg = integrate_arc(f, center, half, cuts[k], cuts[k + 1], opt);
        total += seg.value;
        err += seg.error_estimate;
    }
    return {total, err};
}

}  // namespace za
