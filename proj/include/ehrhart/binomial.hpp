#pragma once

#include <gmpxx.h>

namespace ehrhart {

// Generalized binomial coefficient binom(n, k) for any integer n and k >= 0:
// n(n-1)...(n-k+1) / k!. Negative k yields 0. In particular
// binom(-1, k) = (-1)^k, matching the convention GMP's mpz_bin_ui uses.
inline mpz_class binomial(long n, long k) {
    if (k < 0)
        return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

}  // namespace ehrhart
