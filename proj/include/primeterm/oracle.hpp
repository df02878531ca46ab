#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primeterm/bigint.hpp"
#include "primeterm/parallel.hpp"

namespace primeterm::oracle {

// Brute-force reference implementations used to validate every term-based
// computation in the library. Deliberately disjoint from the term pipeline:
// nothing here touches expression trees, packed-cube words, or the closed
// forms under test, only Bigint arithmetic and plain loops.

inline constexpr std::uint64_t kSieveLimit = 1'000'000;
inline constexpr double kFactorizeLimit = 1e12;

// Primes up to `limit` (inclusive).
std::vector<std::uint32_t> sieve_primes(std::uint32_t limit);

// Number of primes <= n. RangeExceeded beyond kSieveLimit.
std::uint64_t prime_pi(std::uint64_t n);
// The n-th prime, 1-indexed: nth_prime(1) = 2.
std::uint64_t nth_prime(std::uint64_t n);
bool is_prime(std::uint64_t n);

// (prime, exponent) pairs with primes strictly increasing. Trial division
// with a 2/3/5 wheel; RangeExceeded above ~10^12.
using Factorization = std::vector<std::pair<Bigint, unsigned>>;
Factorization factorize(const Bigint& n);
std::uint64_t omega(const Bigint& n);

// |{a in [0,n) : a^2 = 1 mod n}|. Direct O(n) scan up to kSieveLimit, the
// multiplicative prime-power count (via factorize) beyond.
Bigint sqrt_unity_count(const Bigint& n);
// The raw scan, exposed as a kernel: serial reference plus OpenMP form.
std::uint64_t sqrt_unity_scan(std::uint64_t n,
                              ExecPolicy policy = ExecPolicy::Serial);
// Count of square roots of unity mod p^k from the factor structure alone.
Bigint sqrt_unity_crt(const Factorization& f);

// Pascal's triangle rows 0..amax, the reference for every binomial variant.
std::vector<std::vector<Bigint>> pascal_rows(unsigned amax);
// Multiplicative binomial for large a with small b.
Bigint binom(const Bigint& a, std::uint64_t b);

Bigint factorial(std::uint64_t n);
Bigint gcd(Bigint a, Bigint b);  // Euclid by repeated remainder

// Bit statistics by repeated halving, independent of any popcount intrinsic.
std::uint64_t hamming_weight(Bigint n);
std::uint64_t nu2(Bigint n);

// Direct summation of j^r * q^j over j in [0, t).
Bigint geom_sum_direct(unsigned r, const Bigint& q, std::uint64_t t);

// s_d(0..count-1) where s_d(i) = s_d(i-d+1) + s_d(i-d), seeded with d-1
// zeros then a one.
std::vector<Bigint> padovan(std::uint64_t d, std::uint64_t count);

}  // namespace primeterm::oracle
