#include "tbound/arith.hpp"

#include <limits>
#include <stdexcept>

namespace tbound {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact for all n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::uint64_t smallest_prime_other_than(std::uint64_t p) { return p == 2 ? 3 : 2; }

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return reduce_mod(old_s, m);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t sigma0(std::uint64_t n) { return divisors(n).size(); }

std::uint64_t sigma1(std::uint64_t n) {
  std::uint64_t total = 0;
  for (auto d : divisors(n)) total += d;
  return total;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

PrimePower::PrimePower(const Integer& p, unsigned n) : p_(p), n_(n) {
  if (n_ < 1) throw std::invalid_argument("prime power exponent must be >= 1");
  if (!is_prime(p_)) throw std::invalid_argument("not a prime: " + p_.get_str());
  modulus_ = ipow(p_, n_);
}

PrimePower PrimePower::parse(const std::string& text) {
  auto caret = text.find('^');
  try {
    if (caret == std::string::npos) return PrimePower(Integer(text), 1);
    return PrimePower(Integer(text.substr(0, caret)),
                      static_cast<unsigned>(std::stoul(text.substr(caret + 1))));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse prime power: " + text);
  }
}

std::uint64_t PrimePower::p_word() const {
  if (!p_.fits_ulong_p()) throw std::overflow_error("prime does not fit a machine word");
  return p_.get_ui();
}

std::uint64_t PrimePower::modulus_word() const {
  if (!modulus_.fits_ulong_p() || modulus_.get_ui() > std::numeric_limits<std::uint32_t>::max())
    throw std::overflow_error("modulus exceeds 2^32: " + modulus_.get_str());
  return modulus_.get_ui();
}

std::string PrimePower::to_string() const {
  return n_ == 1 ? p_.get_str() : p_.get_str() + "^" + std::to_string(n_);
}

}  // namespace tbound
