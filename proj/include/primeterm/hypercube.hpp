#pragma once

#include <cstdint>
#include <vector>

#include "primeterm/bigint.hpp"
#include "primeterm/parallel.hpp"
#include "primeterm/term.hpp"

namespace primeterm {

// Solution counting on boxes: a non-negative polynomial P over the lattice
// cube [0, t-1]^k, bounded by 2^u there, is packed into one integer W whose
// bit blocks are delta(P(x), u) per lattice point; the number of zeros of P
// on the cube is then HW(W)/u - t^k.

// A simple monomial c * v1^x1 ... vk^xk * x1^r1 ... xk^rk.
struct SimpleMonomial {
  Bigint coeff;
  std::vector<Bigint> bases;      // v_i >= 1
  std::vector<unsigned> degrees;  // r_i >= 0
};

struct HypercubeInstance {
  unsigned k = 1;
  std::uint64_t t = 1;  // cube side
  std::uint64_t u = 1;  // block width; P < 2^u on the cube
  std::vector<SimpleMonomial> poly;
};

// delta(a, b) = (2^b - 1)(2^b - a + 1) for 0 <= a < 2^b. Its Hamming weight
// is 2b when a = 0 and b otherwise, which is what makes the packing count.
Bigint delta_block(const Bigint& a, std::uint64_t b);

// Lexicographic enumeration of the cube: point -> a1 + a2 t + ... + ak t^(k-1).
std::uint64_t beta_index(const std::vector<std::uint64_t>& point,
                         std::uint64_t t);

// Contribution of one monomial to W. The free term (all v = 1, all r = 0)
// has its own closed form that also absorbs the all-blocks constant; it is
// nonzero even when its coefficient is zero.
Bigint contribution_a(const SimpleMonomial& m, std::uint64_t t, std::uint64_t u,
                      unsigned k, const EvalConfig& cfg = {});
Bigint contribution_c(const Bigint& free_coeff, std::uint64_t t,
                      std::uint64_t u, unsigned k, const EvalConfig& cfg = {});

enum class WMethod { Contributions, Direct };

// Both methods return the identical integer; Direct walks the lattice and is
// capped at t^k <= 2^16.
Bigint assemble_w(const HypercubeInstance& inst, WMethod method,
                  const EvalConfig& cfg = {},
                  ExecPolicy policy = ExecPolicy::Serial);

// HW(W)/u - t^k via the contributions form of W.
Bigint count_zeros(const HypercubeInstance& inst, const EvalConfig& cfg = {});

// Exhaustive lattice count of P = 0, the reference the packed form is
// checked against. Serial and OpenMP forms.
std::uint64_t count_zeros_scan(const HypercubeInstance& inst,
                               ExecPolicy policy = ExecPolicy::Serial);

// P evaluated at one lattice point.
Bigint eval_poly_at(const HypercubeInstance& inst,
                    const std::vector<std::uint64_t>& point);

}  // namespace primeterm
