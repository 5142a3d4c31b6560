#include "za/sums.hpp"

#include "za/contour_zeta.hpp"
#include "za/expansions.hpp"
#include "za/special.hpp"

namespace za {

Complex sum_direct(const SumRange& range, const Complex& s) {
    if (range.high - range.low > 100000000L) throw CapExceeded("more than 1e8 terms");
    Complex e = range.exponent == SumRange::Exponent::minus_s ? -s : s - 1L;
    Complex acc = Complex::zero(s.prec());
    for (long n = range.low; n <= range.high; ++n) acc += n_power(n, e);
    return acc;
}

EvalResult sum_th51(const StripPoint& s, const Real& eta1, const Real& eta2, int N,
                    const Config& cfg) {
    const Prec p = s.prec();
    if (!(eta1 < eta2)) throw RegimeViolation("needs eta1 < eta2");
    EvalResult out(p);
    Complex ss = s.s();
    Complex one_m_s = Complex::one(p) - ss;
    Complex pow_terms = (pow(eta2 / Real::two_pi(p), one_m_s) -
                         pow(eta1 / Real::two_pi(p), one_m_s)) / one_m_s;
    out.add_term("power_terms", pow_terms);
    out.add_term("expansion_low", region1_rest_expansion(s, eta1, N, cfg));
    out.add_term("expansion_high", -region1_rest_expansion(s, eta2, N, cfg));
    out.predicted_error_mag = predicted_error_region1(s, eta1, N, false);
    return out;
}

EvalResult sum_th52(const StripPoint& s, const Real& eta, int N, const Config& cfg) {
    const Prec p = s.prec();
    EvalResult out(p);
    Complex ss = s.s();
    Complex one_m_s = Complex::one(p) - ss;
    Complex pow_terms = (pow(eta / Real::two_pi(p), one_m_s) -
                         pow(s.t / Real::two_pi(p), one_m_s)) / one_m_s;
    out.add_term("power_terms", pow_terms);
    if (N == 3) {
        out.add_term("confluent_rest", confluent_rest_closed3(s, cfg));
        out.add_term("region1_rest", -region1_rest_closed3(s, eta, cfg));
    } else {
        out.add_term("confluent_rest", confluent_rest(s, N, cfg));
        out.add_term("region1_rest", -region1_rest_expansion(s, eta, N, cfg));
    }
    out.predicted_error_mag =
        predicted_error_confluent(s, N, N == 3) + predicted_error_region1(s, eta, N, N == 3);
    return out;
}

EvalResult sum_th53(const StripPoint& s, const Real& eta1, const Real& eta2, int N,
                    const Config& cfg) {
    const Prec p = s.prec();
    if (!(eta1 < eta2) || !(eta2 < s.t)) throw RegimeViolation("needs eta1 < eta2 < t");
    EvalResult out(p);
    Complex ss = s.s();
    long a = floor_long(eta1 / Real::two_pi(p)) + 1;
    long b = floor_long(eta2 / Real::two_pi(p));
    out.add_term("chi_sum", chi(ss) * power_sum_s_minus_1(a, b, ss));
    out.add_term("boundary_high", sqrt_region_boundary_term(s, eta2, N, cfg));
    out.add_term("boundary_low", -sqrt_region_boundary_term(s, eta1, N, cfg));
    out.predicted_error_mag =
        predicted_error_sqrt_region(s, eta1, N) + predicted_error_sqrt_region(s, eta2, N);
    return out;
}

}  // namespace za
