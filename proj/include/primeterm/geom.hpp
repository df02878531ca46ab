#pragma once

#include <cstdint>
#include <vector>

#include "primeterm/bigint.hpp"
#include "primeterm/term.hpp"

namespace primeterm {

// G_r(q, t) = sum of j^r * q^j over j in [0, t), the generalized geometric
// progression of degree r.
enum class GeomMethod {
  Closed,      // hand-derived closed forms, r in {0, 1, 2, 4}
  Recurrence,  // differentiate-and-subtract recurrence over an explicit
               // polynomial-in-q representation, r <= 6
  Direct,      // plain summation
};

Bigint geom_sum(unsigned r, const Bigint& q, std::uint64_t t, GeomMethod method,
                const EvalConfig& cfg = {});

// Coefficient vector [c_0 .. c_t] with G_r(q, t) = sum c_j q^j, built by the
// recurrence G_r(q, t) = d/dq G_{r-1}(q, t+1) - sum_{j<r} C(r, j) G_j(q, t).
// Exposed so tests can inspect it; coefficients are plain j^r in the end,
// which is exactly the point of the cross-check.
std::vector<Bigint> geom_recurrence_coeffs(unsigned r, std::uint64_t t);

// G_r(2^k, t) when every j^r fits below 2^k: the sum is a straight
// concatenation of k-bit blocks holding j^r, assembled without any
// arithmetic. Used by the packed-word contributions, where block widths
// dwarf the degree values; DomainError if a block would overflow.
Bigint geom_sum_pow2_placed(unsigned r, std::uint64_t k, std::uint64_t t,
                            const EvalConfig& cfg = {});

}  // namespace primeterm
