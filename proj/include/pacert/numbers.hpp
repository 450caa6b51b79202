#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pacert {

// Arbitrary-precision signed integer used for all exact arithmetic.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

std::string to_string(const Int& v);

// n >= 0 and n == s^2 for some integer s
bool is_perfect_square(const Int& n);

// Deterministic Miller-Rabin with the standard witness set; exact for
// everything below 3.3e24, far beyond any input handled here.
bool is_prime(const Int& n);

// Distinct prime factors of |n| found by trial division up to `limit`,
// with a primality test on the remaining cofactor. `complete` reports
// whether the returned primes account for all of |n|.
std::vector<Int> prime_factors(Int n, bool& complete, long long limit = 1'000'000);

// All positive divisors of |n| (n != 0), sorted ascending. Each trial
// division step decrements `work`; returns nullopt once it goes negative.
std::optional<std::vector<Int>> divisors(const Int& n, long long& work);

long euler_phi(long n);

}  // namespace pacert
