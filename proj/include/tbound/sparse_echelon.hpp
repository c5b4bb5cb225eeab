#pragma once

#include "tbound/field.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tbound {

template <class Elem>
struct SparseEntry {
  std::uint32_t col;
  Elem value;
};

template <class Elem>
using SparseRow = std::vector<SparseEntry<Elem>>;

/// Row echelon form over a field, built by inserting rows one at a time.
///
/// Pivot rule: an incoming row is fully reduced against the existing pivots in
/// ascending column order; its lowest surviving column becomes a new pivot, and
/// the row is scaled so that entry is 1. Pivot rows only hold columns >= their
/// pivot, so reducing any vector in ascending column order terminates with a
/// vector supported on non-pivot columns. The result depends only on the order
/// of insertion.
template <class Field>
class SparseEchelon {
 public:
  using Elem = typename Field::Elem;

  SparseEchelon(Field field, std::size_t ncols)
      : field_(std::move(field)), ncols_(ncols), pivot_row_(ncols, -1), acc_(ncols, field_.zero()),
        touched_(ncols, 0) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const Field& field() const { return field_; }

  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }
  const SparseRow<Elem>& pivot_row_for(std::uint32_t col) const { return rows_[pivot_row_[col]]; }
  const std::vector<SparseRow<Elem>>& rows() const { return rows_; }

  /// Inserts a row; returns true when it raised the rank.
  bool insert(const SparseRow<Elem>& row) {
    auto reduced = reduce_with(row, acc_, touched_);
    if (reduced.empty()) return false;
    Elem lead_inv = field_.inv(reduced.front().value);
    for (auto& e : reduced) e.value = field_.mul(e.value, lead_inv);
    pivot_row_[reduced.front().col] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(reduced));
    return true;
  }

  /// Fully reduces a sparse vector; the result has no entries in pivot columns.
  SparseRow<Elem> reduce_sparse(const SparseRow<Elem>& row) const {
    std::vector<Elem> acc(ncols_, field_.zero());
    std::vector<std::uint8_t> touched(ncols_, 0);
    return reduce_with(row, acc, touched);
  }

  /// Dense variant of reduce_sparse, in place.
  void reduce_dense(std::span<Elem> v) const {
    if (v.size() != ncols_) throw std::invalid_argument("dimension mismatch in reduce_dense");
    for (std::uint32_t c = 0; c < ncols_; ++c) {
      if (field_.is_zero(v[c]) || pivot_row_[c] < 0) continue;
      Elem factor = v[c];
      for (const auto& e : rows_[pivot_row_[c]]) v[e.col] = field_.sub_mul(v[e.col], factor, e.value);
    }
  }

 private:
  // acc/touched must be all-zero on entry and are left all-zero on exit.
  SparseRow<Elem> reduce_with(const SparseRow<Elem>& row, std::vector<Elem>& acc,
                              std::vector<std::uint8_t>& touched) const {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    for (const auto& e : row) {
      if (e.col >= ncols_) throw std::out_of_range("sparse entry column out of range");
      acc[e.col] = field_.add(acc[e.col], e.value);
      if (!touched[e.col]) {
        touched[e.col] = 1;
        heap.push(e.col);
      }
    }
    SparseRow<Elem> out;
    std::vector<std::uint32_t> visited;
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      visited.push_back(c);
      if (field_.is_zero(acc[c])) continue;
      if (pivot_row_[c] < 0) {
        out.push_back({c, acc[c]});
        continue;
      }
      Elem factor = acc[c];
      for (const auto& e : rows_[pivot_row_[c]]) {
        acc[e.col] = field_.sub_mul(acc[e.col], factor, e.value);
        if (!touched[e.col]) {
          touched[e.col] = 1;
          heap.push(e.col);
        }
      }
    }
    for (const auto& e : out) {
      acc[e.col] = field_.zero();
    }
    for (std::uint32_t c : visited) touched[c] = 0;
    return out;
  }

  Field field_;
  std::size_t ncols_;
  std::vector<SparseRow<Elem>> rows_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<Elem> acc_;
  std::vector<std::uint8_t> touched_;
};

}  // namespace tbound
