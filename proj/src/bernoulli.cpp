#include "za/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace za {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<mpq_class> g_bernoulli{mpq_class(1)};

std::mutex g_binom_mutex;
std::vector<std::vector<mpz_class>> g_binom{{mpz_class(1)}};

void extend_bernoulli(int n) {
    // sum_{k=0}^{m} C(m+1,k) B_k = 0  for m >= 1
    for (int m = static_cast<int>(g_bernoulli.size()); m <= n; ++m) {
        mpq_class acc(0);
        mpz_class c(1);  // C(m+1, k), k=0
        for (int k = 0; k < m; ++k) {
            acc += g_bernoulli[static_cast<size_t>(k)] * mpq_class(c);
            c *= (m + 1 - k);
            c /= (k + 1);
        }
        mpq_class b = -acc / mpq_class(m + 1);
        b.canonicalize();
        g_bernoulli.push_back(b);
    }
}

}  // namespace

const mpq_class& bernoulli(int n) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    if (n >= static_cast<int>(g_bernoulli.size())) extend_bernoulli(n);
    return g_bernoulli[static_cast<size_t>(n)];
}

Real rational_real(const mpq_class& q, Prec prec) {
    Real r(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real bernoulli_real(int n, Prec prec) {
    mpq_class q = bernoulli(n);
    return rational_real(q, prec);
}

const mpz_class& binomial_exact(int n, int k) {
    std::lock_guard<std::mutex> lock(g_binom_mutex);
    for (int m = static_cast<int>(g_binom.size()); m <= n; ++m) {
        std::vector<mpz_class> row(static_cast<size_t>(m) + 1, mpz_class(1));
        for (int j = 1; j < m; ++j)
            row[static_cast<size_t>(j)] = g_binom.back()[static_cast<size_t>(j - 1)] +
                                          g_binom.back()[static_cast<size_t>(j)];
        g_binom.push_back(std::move(row));
    }
    static const mpz_class zero(0);
    if (k < 0 || k > n) return zero;
    return g_binom[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Real binomial_real(int n, int k, Prec prec) {
    mpz_class b = binomial_exact(n, k);
    Real r(prec);
    mpfr_set_z(r.raw(), b.get_mpz_t(), MPFR_RNDN);
    return r;
}

}  // namespace za
