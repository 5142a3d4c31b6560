#pragma once

#include "za/eval.hpp"

namespace za {

struct SumRange {
    long low;
    long high;
    enum class Exponent { minus_s, s_minus_1 } exponent;

    SumRange(long low_, long high_, Exponent e) : low(low_), high(high_), exponent(e) {
        if (low < 1) throw RegimeViolation("range must start at n >= 1");
    }
};

// plain partial sum at working precision; desk-scale cap 10^8 terms
Complex sum_direct(const SumRange& range, const Complex& s);

// sum_{[eta1/2pi]+1}^{[eta2/2pi]} n^{-s} via the region-1 expansion difference
EvalResult sum_th51(const StripPoint& s, const Real& eta1, const Real& eta2, int N,
                    const Config& cfg);

// sum_{[t/2pi]+1}^{[eta/2pi]} n^{-s}; at N=3 assembled from the two explicit
// closed forms, otherwise from the generic expansions
EvalResult sum_th52(const StripPoint& s, const Real& eta, int N, const Config& cfg);

// sum_{[t/eta2]+1}^{[t/eta1]} n^{-s} related to chi(s) * sum n^{s-1} plus the
// boundary terms of the sqrt-region expansion
EvalResult sum_th53(const StripPoint& s, const Real& eta1, const Real& eta2, int N,
                    const Config& cfg);

}  // namespace za
