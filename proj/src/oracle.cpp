#include "za/oracle.hpp"

#include <map>
#include <mutex>

#include "za/bernoulli.hpp"

namespace za {

void require_lattice_distance(const Real& x, double delta, const std::string& what) {
    Real d = dist_to_multiple(x, Real::two_pi(x.prec()));
    if (!(d > Real::of(delta, x.prec())))
        throw TooCloseToLatticePoint(what + " = " + x.str(8) + ", dist " + d.str(4));
}

ZetaEmResult zeta_euler_maclaurin(const Complex& s, int digits) {
    const Prec p = s.prec();
    if (s.re() == 1L && s.im().is_zero()) throw PoleAt("s = 1");
    if (digits > (static_cast<double>(p) - 8) * 0.30103)
        throw Error("digits beyond precision budget; raise precision");

    Real target = pow(Real::of(10L, p), Real::of(-digits, p));
    Real abst = abs(s.im());

    // cutoff: 2*pi*M must comfortably exceed |s|; K correction pairs up to 120
    long M = std::max<long>(16, floor_long(abst * Real::of(0.36, p)) + 8);
    M = std::max<long>(M, 2L * digits);
    const int K_max = 120;

    for (int attempt = 0; attempt < 6; ++attempt) {
        Complex ms = -s;
        Complex tail = Complex::zero(p);
        // sum_{n=1}^{M-1} n^{-s} + M^{-s}/2 + M^{1-s}/(s-1)
        Complex head = Complex::zero(p);
        for (long n = 1; n < M; ++n) head += n_power(n, ms);
        Complex Minvs = n_power(M, ms);
        head += Minvs / 2L;
        Complex Mr = Complex::from_real(Real::of(M, p));
        head += (Minvs * Mr) / (s - 1L);

        // correction terms B_{2k}/(2k)! * (prod_{j=0}^{2k-2}(s+j)) * M^{-s-2k+1}
        // built incrementally; remainder bound |(s+2K+1)/(sigma+2K+1)| * |next term|
        Complex rising = Complex::one(p);  // prod_{j=0}^{2k-2}(s+j), starts at k=1: just s
        Complex Mpow = Minvs * Mr;         // M^{-s+1}
        Real Minv2 = 1L / (Real::of(M, p) * Real::of(M, p));
        mpq_class fact(1);
        bool converged = false;
        Real bound = Real::of(0L, p);
        for (int k = 1; k <= K_max; ++k) {
            if (k == 1) {
                rising = s;
                fact = mpq_class(2);  // (2k)! = 2
            } else {
                rising *= (s + (2L * k - 3)) * (s + (2L * k - 2));
                fact *= 2 * k;
                fact *= 2 * k - 1;
            }
            Mpow = Mpow * Minv2;  // M^{-s-2k+1}
            mpq_class bq = bernoulli(2 * k) / fact;
            Complex term = rising * Mpow * rational_real(bq, p);
            // remainder bound after adding this term: |(s+2k-1)/(sigma+2k-1)| * |next|
            Complex rising_next = rising * (s + (2L * k - 1)) * (s + (2L * k));
            mpq_class fact_next = fact * (2 * k + 1) * (2 * k + 2);
            mpq_class bq_next = bernoulli(2 * k + 2) / fact_next;
            Complex term_next = rising_next * (Mpow * Minv2) * rational_real(bq_next, p);
            Real ratio = abs(s + (2L * k + 1)) / abs(s.re() + Real::of(2L * k + 1, p));
            bound = abs(term_next) * ratio;
            tail += term;
            if (bound < target * Real::of(0.25, p)) { converged = true; break; }
        }
        if (converged) {
            ZetaEmResult out{head + tail, bound};
            return out;
        }
        M *= 2;
    }
    throw Error("Euler-Maclaurin did not reach the requested accuracy");
}

Complex zeta_reference(const Complex& s, int digits) {
    return zeta_euler_maclaurin(s, digits).value;
}

namespace {
std::mutex g_cache_mutex;
std::map<std::pair<std::string, int>, Complex> g_zeta_cache;
}  // namespace

Complex zeta_reference_cached(const Complex& s, int digits) {
    std::string key = s.re().str(40) + "," + s.im().str(40) + "," + std::to_string(s.prec());
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_zeta_cache.find({key, digits});
        if (it != g_zeta_cache.end()) return it->second;
    }
    Complex v = zeta_reference(s, digits);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_zeta_cache.insert({{key, digits}, v});
    return v;
}

EvalResult zeta_truncated_dirichlet(const StripPoint& s, const Real& x, Prec prec) {
    if (!(s.sigma > 0L)) throw RegimeViolation("sigma must be positive");
    Real two_pi_x = Real::two_pi(prec) * x;
    if (!(two_pi_x > abs(s.t))) throw RegimeViolation("requires |t| < 2*pi*x");
    EvalResult out(prec);
    Complex sum = Complex::zero(prec);
    Complex ms = -s.s();
    long nx = floor_long(x);
    for (long n = 1; n <= nx; ++n) sum += n_power(n, ms);
    out.add_term("dirichlet_sum", sum);
    Complex one_minus_s = Complex(1L - s.sigma, -s.t);
    out.add_term("x_term", -(pow(x, one_minus_s) / one_minus_s));
    out.predicted_error_mag = pow(x, -s.sigma);
    return out;
}

}  // namespace za
