#pragma once

#include "tbound/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tbound {

/// A point of P^1(Z/p^n Z) in its chosen representative form:
///   affine          (r, 1)     with r mod p^n
///   infinite-branch (1, p*r')  with r' mod p^(n-1)
struct P1Point {
  enum class Kind : std::uint8_t { affine, infinite_branch };
  Kind kind;
  std::uint64_t value;

  friend bool operator==(const P1Point&, const P1Point&) = default;
};

using P1Index = std::uint32_t;

/// Enumerated projective line over Z/p^n Z. Affine points come first (index = residue),
/// then the infinite branch (index = p^n + r'). Immutable after construction.
class P1Table {
 public:
  explicit P1Table(const PrimePower& pp);

  const PrimePower& prime_power() const { return pp_; }
  std::uint64_t p() const { return p_; }
  std::uint64_t modulus() const { return modulus_; }
  std::size_t size() const { return sigma_.size(); }

  P1Point point(P1Index idx) const;
  P1Index index_of(const P1Point& pt) const;

  /// Representative pair (c, d) of the point.
  std::pair<std::uint64_t, std::uint64_t> pair(P1Index idx) const;

  /// Index of the class of (c : d), or nothing when p divides both.
  std::optional<P1Index> index_of_pair(std::int64_t c, std::int64_t d) const;

  P1Index act_sigma(P1Index idx) const { return sigma_[idx]; }
  P1Index act_tau(P1Index idx) const { return tau_[idx]; }

  const std::vector<P1Index>& sigma_perm() const { return sigma_; }
  const std::vector<P1Index>& tau_perm() const { return tau_; }

  std::string describe(P1Index idx) const;

 private:
  PrimePower pp_;
  std::uint64_t p_;
  std::uint64_t modulus_;
  std::uint64_t branch_modulus_;  // p^(n-1)
  std::vector<P1Index> sigma_;
  std::vector<P1Index> tau_;
};

P1Table build_p1_table(const PrimePower& pp);

std::optional<P1Point> normalize(std::int64_t c, std::int64_t d, const PrimePower& pp);

inline P1Index act_sigma(P1Index idx, const P1Table& table) { return table.act_sigma(idx); }
inline P1Index act_tau(P1Index idx, const P1Table& table) { return table.act_tau(idx); }

}  // namespace tbound
