#include "primeterm/geom.hpp"

#include <vector>

#include "primeterm/errors.hpp"

namespace primeterm {

namespace {

Bigint qpow(const Bigint& q, std::uint64_t e, const EvalConfig& cfg) {
  return checked_pow(q, Bigint(e), cfg.max_bits);
}

// Closed forms. Each divides by a power of (q - 1); the divisions are
// asserted exact, so a bad transcription aborts instead of truncating.
Bigint g0(const Bigint& q, std::uint64_t t, const EvalConfig& cfg) {
  return divexact_checked(qpow(q, t, cfg) - Bigint(1), q - Bigint(1), "G0");
}

Bigint g1(const Bigint& q, std::uint64_t t, const EvalConfig& cfg) {
  const Bigint t1(t - 1), tt(t);
  Bigint num = q * (t1 * qpow(q, t, cfg) - tt * qpow(q, t - 1, cfg) + Bigint(1));
  return divexact_checked(num, pow_ui(q - Bigint(1), 2), "G1");
}

Bigint g2(const Bigint& q, std::uint64_t t, const EvalConfig& cfg) {
  const Bigint t1(t - 1), tt(t);
  Bigint num = q * (t1 * t1 * qpow(q, t + 1, cfg) -
                    (Bigint(2) * t1 * t1 + Bigint(2) * t1 - Bigint(1)) *
                        qpow(q, t, cfg) +
                    tt * tt * qpow(q, t - 1, cfg) - q - Bigint(1));
  return divexact_checked(num, pow_ui(q - Bigint(1), 3), "G2");
}

Bigint g4(const Bigint& q, std::uint64_t t, const EvalConfig& cfg) {
  const Bigint t1(t - 1), tt(t);
  const Bigint t1_2 = t1 * t1, t1_3 = t1 * t1 * t1, t1_4 = t1 * t1 * t1 * t1;
  Bigint c1 = Bigint(-4) * t1_4 - Bigint(12) * t1_3 - Bigint(6) * t1_2 +
              Bigint(12) * t1 + Bigint(11);
  Bigint c2 = Bigint(6) * t1_4 + Bigint(12) * t1_3 - Bigint(6) * t1_2 -
              Bigint(12) * t1 + Bigint(11);
  Bigint c3 = Bigint(-4) * t1_4 - Bigint(4) * t1_3 + Bigint(6) * t1_2 -
              Bigint(4) * t1 + Bigint(1);
  Bigint num = q * (t1_4 * qpow(q, t + 3, cfg) + c1 * qpow(q, t, cfg) +
                    c2 * qpow(q, t + 1, cfg) + c3 * qpow(q, t + 2, cfg) +
                    tt * tt * tt * tt * qpow(q, t - 1, cfg) - q * q * q -
                    Bigint(11) * q * q - Bigint(11) * q - Bigint(1));
  return divexact_checked(num, pow_ui(q - Bigint(1), 5), "G4");
}

}  // namespace

std::vector<Bigint> geom_recurrence_coeffs(unsigned r, std::uint64_t t) {
  if (r > 6) throw DomainError("geom recurrence supported for r <= 6");
  // Pascal triangle for the subtraction coefficients.
  Bigint binom[7][7];
  for (unsigned i = 0; i <= 6; ++i) {
    binom[i][0] = Bigint(1);
    for (unsigned j = 1; j <= i; ++j)
      binom[i][j] = (j > i - 1 ? Bigint(0) : binom[i - 1][j]) + binom[i - 1][j - 1];
  }
  // table[m][L - t] is the coefficient vector of G_m(q, L) over powers of q.
  // Degree m at length L needs degree m-1 at length L+1, so lengths shrink
  // as the degree climbs; everything grows out of the all-ones geometric
  // vector, which is what makes the direct-summation comparison meaningful.
  std::vector<std::vector<std::vector<Bigint>>> table(r + 1);
  for (unsigned m = 0; m <= r; ++m) {
    const std::uint64_t nlen = r - m + 1;
    table[m].resize(nlen);
    for (std::uint64_t off = 0; off < nlen; ++off) {
      const std::uint64_t len = t + off;
      if (m == 0) {
        table[0][off].assign(len, Bigint(1));
        continue;
      }
      // Term-wise d/dq of G_{m-1}(q, len + 1): c_j q^j -> j c_j q^(j-1).
      const auto& prev = table[m - 1][off + 1];
      std::vector<Bigint> d(len, Bigint(0));
      for (std::uint64_t j = 1; j < prev.size(); ++j)
        d[j - 1] = Bigint(j) * prev[j];
      for (unsigned j = 0; j < m; ++j) {
        const auto& lower = table[j][off];
        for (std::uint64_t i = 0; i < lower.size(); ++i)
          d[i] -= binom[m][j] * lower[i];
      }
      table[m][off] = std::move(d);
    }
  }
  return table[r][0];
}

Bigint geom_sum_pow2_placed(unsigned r, std::uint64_t k, std::uint64_t t,
                            const EvalConfig& cfg) {
  if (k == 0) throw DomainError("placed geom_sum needs base >= 2");
  if (t == 0) return Bigint(0);
  if (t >= 2) {
    Bigint top = pow_ui(Bigint(t - 1), r);
    if (top.bit_length() > k)
      throw DomainError("geom block too narrow for its degree values");
  }
  require_bits(k * t + 64, cfg.max_bits);
  const std::uint64_t limb_bits = sizeof(mp_limb_t) * 8;
  const std::uint64_t total_bits = k * t + 64;
  std::vector<mp_limb_t> buf((total_bits + limb_bits - 1) / limb_bits + 1, 0);
  for (std::uint64_t j = 0; j < t; ++j) {
    Bigint v = pow_ui(Bigint(j), r);
    if (v.is_zero()) continue;
    const std::uint64_t off = k * j;
    const std::uint64_t word = off / limb_bits, shift = off % limb_bits;
    // Blocks are disjoint, so plain ORs assemble the whole word.
    const std::size_t n = mpz_size(v.raw());
    for (std::size_t i = 0; i < n; ++i) {
      const mp_limb_t limb = mpz_getlimbn(v.raw(), i);
      buf[word + i] |= limb << shift;
      if (shift != 0) buf[word + i + 1] |= limb >> (limb_bits - shift);
    }
  }
  Bigint out;
  mpz_import(out.raw(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
  return out;
}

Bigint geom_sum(unsigned r, const Bigint& q, std::uint64_t t, GeomMethod method,
                const EvalConfig& cfg) {
  if (q < Bigint(2)) throw DomainError("geom_sum needs q >= 2");
  switch (method) {
    case GeomMethod::Direct: {
      Bigint sum(0), qj(1);
      for (std::uint64_t j = 0; j < t; ++j) {
        sum += pow_ui(Bigint(j), r) * qj;
        qj = checked_mul(qj, q, cfg.max_bits);
      }
      return sum;
    }
    case GeomMethod::Recurrence: {
      if (t == 0) return Bigint(0);
      auto c = geom_recurrence_coeffs(r, t);
      // Horner from the top coefficient down.
      Bigint acc(0);
      for (std::size_t i = c.size(); i-- > 0;) {
        acc = checked_mul(acc, q, cfg.max_bits) + c[i];
      }
      return acc;
    }
    case GeomMethod::Closed:
      if (t == 0) return Bigint(0);
      switch (r) {
        case 0:
          return g0(q, t, cfg);
        case 1:
          return g1(q, t, cfg);
        case 2:
          return g2(q, t, cfg);
        case 4:
          return g4(q, t, cfg);
        default:
          throw DomainError("closed geom_sum only for r in {0,1,2,4}");
      }
  }
  throw Error("unreachable");
}

}  // namespace primeterm
