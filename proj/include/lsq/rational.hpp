#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace lsq {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// C(n, k) with the usual convention that out-of-range k gives 0.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Rat rat_binomial(long n, long k) { return Rat(binomial(n, k)); }

} // namespace lsq
