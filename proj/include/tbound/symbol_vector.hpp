#pragma once

#include "tbound/residue_p1.hpp"

#include <cstdint>
#include <map>

namespace tbound {

/// Sparse integer combination of P^1 classes, an element of Z[P^1(Z/p^n Z)].
/// Zero coefficients are never stored.
class SymbolVector {
 public:
  explicit SymbolVector(std::size_t p1_size = 0) : p1_size_(p1_size) {}

  std::size_t p1_size() const { return p1_size_; }
  const std::map<P1Index, std::int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  std::int64_t coefficient(P1Index idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(P1Index idx, std::int64_t c) {
    if (c == 0) return;
    auto& slot = terms_[idx];
    slot += c;
    if (slot == 0) terms_.erase(idx);
  }

  SymbolVector& operator+=(const SymbolVector& other) {
    for (auto [idx, c] : other.terms_) add(idx, c);
    return *this;
  }

  SymbolVector scaled(std::int64_t k) const {
    SymbolVector out(p1_size_);
    if (k == 0) return out;
    for (auto [idx, c] : terms_) out.terms_[idx] = c * k;
    return out;
  }

  std::int64_t coefficient_total() const {
    std::int64_t total = 0;
    for (auto [idx, c] : terms_) total += c;
    return total;
  }

  friend bool operator==(const SymbolVector&, const SymbolVector&) = default;

 private:
  std::size_t p1_size_;
  std::map<P1Index, std::int64_t> terms_;
};

}  // namespace tbound
