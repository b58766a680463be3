#pragma once

// Classical exact sequences shared by the Nörlund, central-factorial and
// closed-form modules.

#include "gjms/big_rational.hpp"

namespace gjms {

/// Bernoulli number B_n with B_1 = -1/2. Memoized; safe to call concurrently.
BigRational bernoulli(int n);

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);

BigInt factorial(long n);

/// 2^e as an exact rational, e may be negative.
BigRational pow2(long e);

}  // namespace gjms
