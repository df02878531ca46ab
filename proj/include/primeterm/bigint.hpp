#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "primeterm/errors.hpp"

namespace primeterm {

// Signed arbitrary-precision integer: a value-semantic RAII wrapper over
// GMP's mpz_t. This is the universal number type of the library; everything
// exact goes through it.
class Bigint {
 public:
  Bigint() { mpz_init(z_); }
  Bigint(int v) { mpz_init_set_si(z_, v); }
  Bigint(long v) { mpz_init_set_si(z_, v); }
  Bigint(long long v);
  Bigint(unsigned int v) { mpz_init_set_ui(z_, v); }
  Bigint(unsigned long v) { mpz_init_set_ui(z_, v); }
  Bigint(unsigned long long v);
  explicit Bigint(std::string_view decimal);

  Bigint(const Bigint& o) { mpz_init_set(z_, o.z_); }
  Bigint(Bigint&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Bigint& operator=(const Bigint& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Bigint& operator=(Bigint&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Bigint() { mpz_clear(z_); }

  void swap(Bigint& o) noexcept { mpz_swap(z_, o.z_); }

  // 2^e. Exponent is a machine integer on purpose: anything larger is out
  // of budget for every caller in this library.
  static Bigint pow2(std::uint64_t e);

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool odd() const { return mpz_odd_p(z_) != 0; }

  // Bits of |x|; 0 for x == 0.
  std::uint64_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(z_, 2);
  }
  // Number of set bits. Defined for non-negative values only.
  std::uint64_t popcount() const;
  // Index of the lowest set bit (the 2-adic valuation). x must be nonzero.
  std::uint64_t trailing_zeros() const;
  bool tstbit(std::uint64_t i) const { return mpz_tstbit(z_, i) != 0; }

  bool fits_u64() const;
  std::uint64_t to_u64() const;  // DomainError unless 0 <= x < 2^64
  std::string to_string() const;
  double to_double() const { return mpz_get_d(z_); }

  Bigint& operator+=(const Bigint& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  Bigint& operator-=(const Bigint& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  Bigint& operator*=(const Bigint& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }
  Bigint& operator<<=(std::uint64_t k) {
    mpz_mul_2exp(z_, z_, k);
    return *this;
  }
  // Arithmetic shift toward zero; exact when the low k bits are clear.
  Bigint& operator>>=(std::uint64_t k) {
    mpz_tdiv_q_2exp(z_, z_, k);
    return *this;
  }

  friend Bigint operator+(Bigint a, const Bigint& b) { return a += b; }
  friend Bigint operator-(Bigint a, const Bigint& b) { return a -= b; }
  friend Bigint operator*(Bigint a, const Bigint& b) { return a *= b; }
  friend Bigint operator<<(Bigint a, std::uint64_t k) { return a <<= k; }
  friend Bigint operator-(const Bigint& a) {
    Bigint r;
    mpz_neg(r.z_, a.z_);
    return r;
  }

  friend bool operator==(const Bigint& a, const Bigint& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend bool operator!=(const Bigint& a, const Bigint& b) {
    return mpz_cmp(a.z_, b.z_) != 0;
  }
  friend bool operator<(const Bigint& a, const Bigint& b) {
    return mpz_cmp(a.z_, b.z_) < 0;
  }
  friend bool operator<=(const Bigint& a, const Bigint& b) {
    return mpz_cmp(a.z_, b.z_) <= 0;
  }
  friend bool operator>(const Bigint& a, const Bigint& b) {
    return mpz_cmp(a.z_, b.z_) > 0;
  }
  friend bool operator>=(const Bigint& a, const Bigint& b) {
    return mpz_cmp(a.z_, b.z_) >= 0;
  }

  // Floor division/remainder; divisor must be positive (checked by callers
  // that accept user input, asserted here). Remainder lands in [0, b).
  friend Bigint fdiv_q(const Bigint& a, const Bigint& b);
  friend Bigint fdiv_r(const Bigint& a, const Bigint& b);
  friend void fdiv_qr(Bigint& q, Bigint& r, const Bigint& a, const Bigint& b);

  // Division that must be exact; throws ExactDivisionViolated otherwise.
  friend Bigint divexact_checked(const Bigint& a, const Bigint& b,
                                 const char* what);

  friend Bigint pow_ui(const Bigint& base, std::uint64_t e);
  friend Bigint abs(const Bigint& a) {
    Bigint r;
    mpz_abs(r.z_, a.z_);
    return r;
  }

  mpz_srcptr raw() const { return z_; }
  mpz_ptr raw() { return z_; }

 private:
  mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const Bigint& v);

// Default evaluation budget: 2^33 bits (one GiB of magnitude). Large enough
// for the quarter-gigabit intermediates the library's stretch cases need,
// small enough to refuse runaway double-exponential towers deterministically.
inline constexpr std::uint64_t kDefaultMaxBits = std::uint64_t(1) << 33;

void require_bits(std::uint64_t needed, std::uint64_t max_bits);
void require_fits(const Bigint& v, std::uint64_t max_bits);

// Budget-checked primitives. Multiplication and exponentiation are checked
// *before* computing; additive results are cheap to check afterwards.
Bigint checked_mul(const Bigint& a, const Bigint& b, std::uint64_t max_bits);
Bigint checked_pow2(const Bigint& e, std::uint64_t max_bits);
Bigint checked_pow(const Bigint& base, const Bigint& e, std::uint64_t max_bits);

}  // namespace primeterm
