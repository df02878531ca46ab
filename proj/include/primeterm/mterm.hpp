#pragma once

#include <cstdint>

#include "primeterm/bigint.hpp"
#include "primeterm/hypercube.hpp"
#include "primeterm/term.hpp"

namespace primeterm {

// The packed word M(n) counting square roots of unity mod n: the hypercube
// instance for P(x1, x2) = (x1^2 - n x2 - 1)^2 on [0, n]^2 with side
// t(n) = n + 1 and block width u(n) = n + 5. HW(M(n))/u(n) - t(n)^2 is the
// number of a in [0, n) with a^2 = 1 mod n (and 0 for n = 0).

enum class MVariant {
  Assembled,  // sum of the C and five A contributions
  Explicit,   // the fully written-out closed form (four long cofactors)
};

inline std::uint64_t m_side(std::uint64_t n) { return n + 1; }
inline std::uint64_t m_width(std::uint64_t n) { return n + 5; }

// The instance itself, so tests can scan it directly.
HypercubeInstance unity_instance(std::uint64_t n);

// Bits needed for M(n): 2 u(n) t(n)^2. Exposed so refusals can name the
// requirement before anything is allocated.
Bigint m_required_bits(const Bigint& n);

Bigint build_m(const Bigint& n, MVariant variant, const EvalConfig& cfg = {});

// True iff build_m(4n) * D(4n) == L(4n) where L/D is the symbolic
// common-denominator normal form of M (see fhat.hpp).
bool normalized_m_check(std::uint64_t n, const EvalConfig& cfg = {});

}  // namespace primeterm
