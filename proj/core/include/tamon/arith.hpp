#pragma once

#include <cstdint>
#include <vector>

namespace tamon {

long euler_phi(long n);

std::vector<long> divisors(long n);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

// C(n, k), throws std::overflow_error if the value does not fit in long.
long binomial(long n, long k);

}  // namespace tamon
