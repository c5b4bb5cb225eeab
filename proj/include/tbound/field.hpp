#pragma once

#include "tbound/arith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tbound {

/// Coefficient field choice for homology computations: Q or F_l.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  std::uint64_t l = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t l) {
    if (!is_prime(l)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(l));
    return {Kind::prime_field, l};
  }
  /// "Q" / "QQ" / "0" for rationals, otherwise a prime l.
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return kind == Kind::rationals; }
  std::string to_string() const { return is_rational() ? "Q" : "F_" + std::to_string(l); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// F_l with elements stored as residues in [0, l).
struct PrimeField {
  using Elem = std::uint32_t;
  std::uint64_t l;

  explicit PrimeField(std::uint64_t l_) : l(l_) {
    if (l_ >= (1ULL << 31)) throw std::invalid_argument("prime field characteristic too large");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const { return static_cast<Elem>(reduce_mod(v, l)); }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + b) % l); }
  Elem sub(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} + l - b) % l); }
  Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(l - a); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % l); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in F_l");
    return static_cast<Elem>(powmod(a, l - 2, l));
  }
  /// a - m*b, the elimination update.
  Elem sub_mul(Elem a, Elem m, Elem b) const { return sub(a, mul(m, b)); }
  std::string to_string(Elem a) const { return std::to_string(a); }
};

struct RationalField {
  using Elem = Rational;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
    return 1 / a;
  }
  Elem sub_mul(const Elem& a, const Elem& m, const Elem& b) const { return a - m * b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

}  // namespace tbound
