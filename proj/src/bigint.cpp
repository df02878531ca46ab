#include "primeterm/bigint.hpp"

#include <climits>
#include <ostream>

namespace primeterm {

Bigint::Bigint(long long v) {
  static_assert(sizeof(long long) == sizeof(long));
  mpz_init_set_si(z_, static_cast<long>(v));
}

Bigint::Bigint(unsigned long long v) {
  static_assert(sizeof(unsigned long long) == sizeof(unsigned long));
  mpz_init_set_ui(z_, static_cast<unsigned long>(v));
}

Bigint::Bigint(std::string_view decimal) {
  std::string s(decimal);
  if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
    mpz_clear(z_);
    mpz_init(z_);
    throw SyntaxError("not a decimal integer: '" + s + "'", 0);
  }
}

Bigint Bigint::pow2(std::uint64_t e) {
  Bigint r;
  mpz_setbit(r.z_, e);
  return r;
}

std::uint64_t Bigint::popcount() const {
  if (sign() < 0) throw DomainError("popcount of a negative value");
  return mpz_popcount(z_);
}

std::uint64_t Bigint::trailing_zeros() const {
  if (is_zero()) throw DomainError("2-adic valuation of zero");
  return mpz_scan1(z_, 0);
}

bool Bigint::fits_u64() const {
  return sign() >= 0 && mpz_fits_ulong_p(z_) != 0;
}

std::uint64_t Bigint::to_u64() const {
  if (!fits_u64()) throw DomainError("value does not fit in 64 bits");
  return mpz_get_ui(z_);
}

std::string Bigint::to_string() const {
  std::string s(mpz_sizeinbase(z_, 10) + 2, '\0');
  mpz_get_str(s.data(), 10, z_);
  s.resize(s.find('\0'));
  return s;
}

Bigint fdiv_q(const Bigint& a, const Bigint& b) {
  if (b.sign() <= 0) throw DomainError("division by non-positive value");
  Bigint q;
  mpz_fdiv_q(q.z_, a.z_, b.z_);
  return q;
}

Bigint fdiv_r(const Bigint& a, const Bigint& b) {
  if (b.sign() <= 0) throw DomainError("modulus by non-positive value");
  Bigint r;
  mpz_fdiv_r(r.z_, a.z_, b.z_);
  return r;
}

void fdiv_qr(Bigint& q, Bigint& r, const Bigint& a, const Bigint& b) {
  if (b.sign() <= 0) throw DomainError("division by non-positive value");
  mpz_fdiv_qr(q.z_, r.z_, a.z_, b.z_);
}

Bigint divexact_checked(const Bigint& a, const Bigint& b, const char* what) {
  if (b.is_zero()) throw DomainError("exact division by zero");
  Bigint q, r;
  mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
  if (!r.is_zero()) {
    throw ExactDivisionViolated(std::string(what) +
                                ": division left a remainder");
  }
  return q;
}

Bigint pow_ui(const Bigint& base, std::uint64_t e) {
  Bigint r;
  mpz_pow_ui(r.z_, base.z_, e);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Bigint& v) {
  return os << v.to_string();
}

void require_bits(std::uint64_t needed, std::uint64_t max_bits) {
  if (needed > max_bits) {
    throw BitLimitExceeded(std::to_string(needed), max_bits);
  }
}

void require_fits(const Bigint& v, std::uint64_t max_bits) {
  require_bits(v.bit_length(), max_bits);
}

Bigint checked_mul(const Bigint& a, const Bigint& b, std::uint64_t max_bits) {
  // bits(a*b) <= bits(a) + bits(b); refuse before allocating.
  require_bits(a.bit_length() + b.bit_length(), max_bits + 1);
  Bigint r = a * b;
  require_fits(r, max_bits);
  return r;
}

Bigint checked_pow2(const Bigint& e, std::uint64_t max_bits) {
  if (e.sign() < 0) throw DomainError("negative exponent");
  if (!e.fits_u64() || e.to_u64() >= max_bits) {
    throw BitLimitExceeded((e + Bigint(1)).to_string(), max_bits);
  }
  return Bigint::pow2(e.to_u64());
}

Bigint checked_pow(const Bigint& base, const Bigint& e,
                   std::uint64_t max_bits) {
  if (e.sign() < 0) throw DomainError("negative exponent");
  if (e.is_zero()) return Bigint(1);
  const std::uint64_t bl = base.bit_length();
  if (bl <= 1) {
    // 0, 1, -1: closed under powers.
    if (base.sign() >= 0) return base;
    return e.odd() ? base : Bigint(1);
  }
  // bits(base^e) <= e * bits(base).
  Bigint needed = e * Bigint(bl);
  if (!needed.fits_u64()) {
    throw BitLimitExceeded(needed.to_string(), max_bits);
  }
  require_bits(needed.to_u64() - (e.to_u64() - 1), max_bits);
  Bigint r = pow_ui(base, e.to_u64());
  require_fits(r, max_bits);
  return r;
}

}  // namespace primeterm
