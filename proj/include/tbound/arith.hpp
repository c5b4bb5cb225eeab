#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tbound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Deterministic Miller-Rabin for 64-bit inputs (fixed witness set), BPSW via GMP above that.
bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

/// Smallest prime different from p.
std::uint64_t smallest_prime_other_than(std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Reduces a signed value into [0, m).
inline std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) {
  auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = a % mm;
  return static_cast<std::uint64_t>(r < 0 ? r + mm : r);
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Prime factorization by trial division, ascending primes with exponents.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t sigma0(std::uint64_t n);
std::uint64_t sigma1(std::uint64_t n);

Integer ipow(const Integer& base, unsigned long e);

/// A prime power p^n with n >= 1. The primality of p is checked on construction.
class PrimePower {
 public:
  PrimePower(const Integer& p, unsigned n);
  PrimePower(std::uint64_t p, unsigned n) : PrimePower(Integer(static_cast<unsigned long>(p)), n) {}

  /// Parses "p^n" or a bare prime "p".
  static PrimePower parse(const std::string& text);

  const Integer& p() const { return p_; }
  unsigned n() const { return n_; }
  const Integer& modulus() const { return modulus_; }

  /// Machine-word views. Throws std::overflow_error when the modulus exceeds 2^32.
  std::uint64_t p_word() const;
  std::uint64_t modulus_word() const;

  std::string to_string() const;

  friend bool operator==(const PrimePower& a, const PrimePower& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  Integer p_;
  unsigned n_;
  Integer modulus_;
};

}  // namespace tbound
