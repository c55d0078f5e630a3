#pragma once

// Exact arbitrary-precision counting, backed by GMP.

#include <gmpxx.h>

namespace atomkit {

using BigCount = mpz_class;

inline BigCount binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigCount factorial(long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// ceil(2^e) for integer e, so pow2(-1) = 1.
inline BigCount pow2(long e) {
    if (e <= 0) return 1;
    BigCount r = 1;
    r <<= static_cast<unsigned long>(e);
    return r;
}

}  // namespace atomkit
