#include "pacert/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace pacert {

std::string to_string(const Int& v) { return v.str(); }

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int s = boost::multiprecision::sqrt(n);
    return s * s == n;
}

namespace {

bool miller_rabin(const Int& n, const Int& a) {
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    Int x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (long a : small)
        if (!miller_rabin(n, Int(a))) return false;
    return true;
}

std::vector<Int> prime_factors(Int n, bool& complete, long long limit) {
    complete = true;
    n = abs(n);
    std::vector<Int> primes;
    if (n <= 1) return primes;
    for (Int d = 2; d <= limit && d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) {
        if (is_prime(n))
            primes.push_back(n);
        else
            complete = false;
    }
    return primes;
}

std::optional<std::vector<Int>> divisors(const Int& n, long long& work) {
    Int m = abs(n);
    if (m == 0) throw std::invalid_argument("divisors: zero has no finite divisor list");
    std::vector<std::pair<Int, int>> pf;
    for (Int d = 2; d * d <= m; d == 2 ? d = 3 : d += 2) {
        if (--work < 0) return std::nullopt;
        if (m % d == 0) {
            int e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            pf.emplace_back(d, e);
        }
    }
    if (m > 1) pf.emplace_back(m, 1);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : pf) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                if (--work < 0) return std::nullopt;
                divs.push_back(divs[i] * pk);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: positive argument required");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace pacert
