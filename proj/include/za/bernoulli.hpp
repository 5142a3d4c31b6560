#pragma once

#include <gmpxx.h>

#include "za/real.hpp"

namespace za {

// Exact Bernoulli number B_n (B_1 = -1/2 convention). Cached, thread-safe.
const mpq_class& bernoulli(int n);

// B_n rounded to the given precision.
Real bernoulli_real(int n, Prec prec);

// Exact binomial coefficient.
const mpz_class& binomial_exact(int n, int k);

Real binomial_real(int n, int k, Prec prec);

Real rational_real(const mpq_class& q, Prec prec);

}  // namespace za
