#include "tamon/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tamon {

long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        long num = n - k + i;
        // r = C(n-k+i-1, i-1); r * num is divisible by i since the result
        // is C(n-k+i, i).
        if (num != 0 && r > (long)9.2e18 / num) throw std::overflow_error("binomial overflow");
        r = r * num / i;
    }
    return r;
}

}  // namespace tamon
