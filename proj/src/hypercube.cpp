#include "primeterm/hypercube.hpp"

#include "primeterm/errors.hpp"
#include "primeterm/geom.hpp"

namespace primeterm {

Bigint delta_block(const Bigint& a, std::uint64_t b) {
  if (a.sign() < 0 || a >= Bigint::pow2(b))
    throw DomainError("delta needs 0 <= a < 2^b");
  return (Bigint::pow2(b) - Bigint(1)) * (Bigint::pow2(b) - a + Bigint(1));
}

std::uint64_t beta_index(const std::vector<std::uint64_t>& point,
                         std::uint64_t t) {
  std::uint64_t idx = 0;
  for (std::size_t i = point.size(); i-- > 0;) idx = idx * t + point[i];
  return idx;
}

Bigint eval_poly_at(const HypercubeInstance& inst,
                    const std::vector<std::uint64_t>& point) {
  Bigint sum(0);
  for (const auto& m : inst.poly) {
    Bigint term = m.coeff;
    for (unsigned i = 0; i < inst.k; ++i) {
      if (!(m.bases[i] == Bigint(1)))
        term *= pow_ui(m.bases[i], point[i]);
      if (m.degrees[i] > 0) term *= pow_ui(Bigint(point[i]), m.degrees[i]);
    }
    sum += term;
  }
  return sum;
}

namespace {

bool is_free_term(const SimpleMonomial& m) {
  for (const auto& v : m.bases)
    if (!(v == Bigint(1))) return false;
  for (unsigned r : m.degrees)
    if (r != 0) return false;
  return true;
}

Bigint cube_size(std::uint64_t t, unsigned k) {
  Bigint n(1);
  for (unsigned i = 0; i < k; ++i) n *= Bigint(t);
  return n;
}

Bigint geom_for_contribution(unsigned r, const Bigint& q, std::uint64_t t,
                             const EvalConfig& cfg) {
  // Block bases here are powers of two far wider than any j^r, so the
  // progression is usually a straight block concatenation.
  if (q.sign() > 0 && q.popcount() == 1) {
    const std::uint64_t k = q.trailing_zeros();
    if (k >= 1 && (t < 2 || pow_ui(Bigint(t - 1), r).bit_length() <= k)) {
      return geom_sum_pow2_placed(r, k, t, cfg);
    }
  }
  if (r == 0 || r == 1 || r == 2 || r == 4)
    return geom_sum(r, q, t, GeomMethod::Closed, cfg);
  if (r <= 6) return geom_sum(r, q, t, GeomMethod::Recurrence, cfg);
  return geom_sum(r, q, t, GeomMethod::Direct, cfg);
}

}  // namespace

Bigint contribution_a(const SimpleMonomial& m, std::uint64_t t, std::uint64_t u,
                      unsigned k, const EvalConfig& cfg) {
  // -(2^u - 1) * c * prod_i G_{r_i}(2^(2u t^(i-1)) * v_i, t)
  Bigint result = -(checked_pow2(Bigint(u), cfg.max_bits) - Bigint(1)) * m.coeff;
  Bigint block_exp(2 * u);  // 2u t^(i-1), advanced by *t per coordinate
  for (unsigned i = 0; i < k; ++i) {
    Bigint q = checked_mul(checked_pow2(block_exp, cfg.max_bits), m.bases[i],
                           cfg.max_bits);
    result = checked_mul(result, geom_for_contribution(m.degrees[i], q, t, cfg),
                         cfg.max_bits);
    block_exp *= Bigint(t);
  }
  return result;
}

Bigint contribution_c(const Bigint& free_coeff, std::uint64_t t,
                      std::uint64_t u, unsigned k, const EvalConfig& cfg) {
  // (2^u - c + 1)(2^(2u t^k) - 1) / (2^u + 1); the division is exact because
  // 2^(2u) - 1 divides 2^(2u t^k) - 1.
  Bigint twou = checked_pow2(Bigint(u), cfg.max_bits);
  Bigint all = checked_pow2(Bigint(2 * u) * cube_size(t, k), cfg.max_bits) - Bigint(1);
  return divexact_checked((twou - free_coeff + Bigint(1)) * all,
                          twou + Bigint(1), "C contribution");
}

Bigint assemble_w(const HypercubeInstance& inst, WMethod method,
                  const EvalConfig& cfg, ExecPolicy policy) {
  const std::uint64_t t = inst.t;
  const unsigned k = inst.k;
  if (method == WMethod::Contributions) {
    // One C term for the free coefficient (zero if absent), one A term per
    // non-free monomial. Contributions are independent; the chunked sum is
    // deterministic regardless of schedule.
    Bigint free_coeff(0);
    std::vector<const SimpleMonomial*> rest;
    bool have_free = false;
    for (const auto& m : inst.poly) {
      if (!have_free && is_free_term(m)) {
        free_coeff = m.coeff;
        have_free = true;
      } else {
        rest.push_back(&m);
      }
    }
    Bigint w = contribution_c(free_coeff, t, inst.u, k, cfg);
    w += chunked_reduce<Bigint>(
        rest.size(), Bigint(0),
        [&](Bigint acc, std::uint64_t i) {
          return acc + contribution_a(*rest[i], t, inst.u, k, cfg);
        },
        [](Bigint a, Bigint b) { return a + b; }, policy);
    return w;
  }

  // Direct lattice walk.
  Bigint total = cube_size(t, k);
  if (!total.fits_u64() || total.to_u64() > (std::uint64_t(1) << 16))
    throw RangeExceeded("direct W assembly capped at t^k <= 2^16");
  const std::uint64_t n = total.to_u64();
  const Bigint bound = Bigint::pow2(inst.u);
  return chunked_reduce<Bigint>(
      n, Bigint(0),
      [&](Bigint acc, std::uint64_t idx) {
        std::vector<std::uint64_t> point(k);
        std::uint64_t rem = idx;
        for (unsigned i = 0; i < k; ++i) {
          point[i] = rem % t;
          rem /= t;
        }
        Bigint val = eval_poly_at(inst, point);
        if (val.sign() < 0 || val >= bound)
          throw DomainError("polynomial escapes [0, 2^u) on the cube");
        return acc + (delta_block(val, inst.u) << (2 * inst.u * idx));
      },
      [](Bigint a, Bigint b) { return a + b; }, policy);
}

Bigint count_zeros(const HypercubeInstance& inst, const EvalConfig& cfg) {
  Bigint w = assemble_w(inst, WMethod::Contributions, cfg);
  Bigint hw(w.popcount());
  Bigint d = divexact_checked(hw, Bigint(inst.u), "HW(W)/u") -
             cube_size(inst.t, inst.k);
  return d;
}

std::uint64_t count_zeros_scan(const HypercubeInstance& inst,
                               ExecPolicy policy) {
  Bigint total = cube_size(inst.t, inst.k);
  if (!total.fits_u64() || total.to_u64() > (std::uint64_t(1) << 16))
    throw RangeExceeded("exhaustive scan capped at t^k <= 2^16");
  const std::uint64_t n = total.to_u64();
  return chunked_reduce<std::uint64_t>(
      n, 0,
      [&](std::uint64_t acc, std::uint64_t idx) {
        std::vector<std::uint64_t> point(inst.k);
        std::uint64_t rem = idx;
        for (unsigned i = 0; i < inst.k; ++i) {
          point[i] = rem % inst.t;
          rem /= inst.t;
        }
        return acc + (eval_poly_at(inst, point).is_zero() ? 1 : 0);
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; }, policy);
}

}  // namespace primeterm
