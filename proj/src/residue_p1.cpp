#include "tbound/residue_p1.hpp"

#include <stdexcept>

namespace tbound {

namespace {

std::optional<P1Point> normalize_words(std::uint64_t c, std::uint64_t d, std::uint64_t p,
                                       std::uint64_t modulus) {
  if (d % p != 0) {
    auto inv = inverse_mod(d, modulus);
    return P1Point{P1Point::Kind::affine, mulmod(c, *inv, modulus)};
  }
  if (c % p == 0) return std::nullopt;
  auto inv = inverse_mod(c, modulus);
  std::uint64_t t = mulmod(d, *inv, modulus);  // divisible by p
  return P1Point{P1Point::Kind::infinite_branch, (t / p) % (modulus / p)};
}

}  // namespace

P1Table::P1Table(const PrimePower& pp)
    : pp_(pp), p_(pp.p_word()), modulus_(pp.modulus_word()), branch_modulus_(modulus_ / p_) {
  const std::size_t count = modulus_ + branch_modulus_;
  sigma_.resize(count);
  tau_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto [w, t] = pair(static_cast<P1Index>(i));
    // (w, t).sigma = (-t, w);  (w, t).tau = (t, -w - t)
    std::uint64_t minus_t = (modulus_ - t) % modulus_;
    std::uint64_t minus_wt = (2 * modulus_ - w - t) % modulus_;
    sigma_[i] = index_of(*normalize_words(minus_t, w, p_, modulus_));
    tau_[i] = index_of(*normalize_words(t, minus_wt, p_, modulus_));
  }
}

P1Point P1Table::point(P1Index idx) const {
  if (idx < modulus_) return {P1Point::Kind::affine, idx};
  return {P1Point::Kind::infinite_branch, idx - modulus_};
}

P1Index P1Table::index_of(const P1Point& pt) const {
  if (pt.kind == P1Point::Kind::affine) return static_cast<P1Index>(pt.value);
  return static_cast<P1Index>(modulus_ + pt.value);
}

std::pair<std::uint64_t, std::uint64_t> P1Table::pair(P1Index idx) const {
  if (idx < modulus_) return {idx, 1};
  return {1, (p_ * (idx - modulus_)) % modulus_};
}

std::optional<P1Index> P1Table::index_of_pair(std::int64_t c, std::int64_t d) const {
  auto pt = normalize_words(reduce_mod(c, modulus_), reduce_mod(d, modulus_), p_, modulus_);
  if (!pt) return std::nullopt;
  return index_of(*pt);
}

std::string P1Table::describe(P1Index idx) const {
  auto [c, d] = pair(idx);
  return "(" + std::to_string(c) + ":" + std::to_string(d) + ")";
}

P1Table build_p1_table(const PrimePower& pp) { return P1Table(pp); }

std::optional<P1Point> normalize(std::int64_t c, std::int64_t d, const PrimePower& pp) {
  std::uint64_t m = pp.modulus_word();
  return normalize_words(reduce_mod(c, m), reduce_mod(d, m), pp.p_word(), m);
}

}  // namespace tbound
