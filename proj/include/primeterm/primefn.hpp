#pragma once

#include <cstdint>

#include "primeterm/bigint.hpp"
#include "primeterm/term.hpp"

namespace primeterm {

// The prime-function chain built on the packed word M: square roots of
// unity, distinct prime divisors, the prime-counting function, the n-th
// prime, and the next-prime map. Every function runs in a Term mode (the
// packed-word pipeline with native popcount/valuation on evaluated
// integers) and an Oracle mode (sieve / factorization / residue scan) so
// the two routes can be compared wherever both are feasible.

enum class FnMode { Term, Oracle };

// |{a in [0, n) : a^2 = 1 mod n}|; 0 for n = 0.
Bigint sqrt_unity_count(const Bigint& n, FnMode mode, const EvalConfig& cfg = {});

// Number of distinct prime divisors of n >= 1, as nu2 of the unity count at
// 4n, minus one.
Bigint omega(const Bigint& n, FnMode mode, const EvalConfig& cfg = {});

// Number of primes <= n, as omega(n!).
Bigint prime_pi(const Bigint& n, FnMode mode, const EvalConfig& cfg = {});

enum class NMode { Hypercube, Oracle };

// The n-th prime as the count of a in [0, n^2] whose unity count at 4(a!)
// stays within 2^n. Hypercube mode evaluates that inequality on integers
// from the packed word; Oracle mode uses the sieve identity (the count is
// 2^(pi(a)+1)) with integer exponent comparison.
Bigint nth_prime(std::uint64_t n, NMode mode, const EvalConfig& cfg = {});

// Bits the hypercube route would need for nth_prime(n); what refusals report.
double nth_prime_required_bits_log2(std::uint64_t n);

// Smallest prime strictly greater than x: next_prime(x) = p(pi(x) + 1).
Bigint next_prime(const Bigint& x, FnMode mode, const EvalConfig& cfg = {});

}  // namespace primeterm
