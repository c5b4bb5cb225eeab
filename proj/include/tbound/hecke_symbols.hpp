#pragma once

#include "tbound/bounds.hpp"
#include "tbound/rel_homology.hpp"
#include "tbound/residue_p1.hpp"
#include "tbound/symbol_vector.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace tbound {

/// One admissible matrix (u v; w t) with 0 <= v < u, 0 <= w < t and ut - vw = r.
struct HeckeTuple {
  std::int64_t u, v, w, t;
};

/// Visits the admissible tuples in the order t ascending, w ascending, u ascending
/// (v ascending when w = 0). Uses t <= r and u + t <= r + 1.
template <class Visit>
void for_each_hecke_tuple(std::int64_t r, Visit&& visit) {
  for (std::int64_t t = 1; t <= r; ++t) {
    for (std::int64_t w = 0; w < t; ++w) {
      for (std::int64_t u = 1; u + t <= r + 1; ++u) {
        if (w == 0) {
          if (u * t != r) continue;
          for (std::int64_t v = 0; v < u; ++v) visit(HeckeTuple{u, v, w, t});
          continue;
        }
        std::int64_t num = u * t - r;
        if (num < 0 || num % w != 0) continue;
        std::int64_t v = num / w;
        if (v < u) visit(HeckeTuple{u, v, w, t});
      }
    }
  }
}

/// T_r{0, oo} as the sum of the classes of (w : t) over the admissible tuples; terms
/// with p | gcd(w, t) are dropped.
SymbolVector winding_image(std::int64_t r, const P1Table& table);

/// Number of admissible tuples and how many of them were dropped for p | gcd(w, t).
struct TupleCensus {
  std::uint64_t tuples = 0;
  std::uint64_t dropped = 0;
};
TupleCensus winding_tuple_census(std::int64_t r, const P1Table& table);

/// Classes of the pairs (w, t), 0 <= w < t, admitting some 0 <= v < u with
/// 1 <= ut - vw <= r, minus the class of (1, r).
struct SigmaRSet {
  std::int64_t r = 0;
  std::set<P1Index> members;

  bool contains(P1Index idx) const { return members.count(idx) != 0; }
};

SigmaRSet sigma_r_set(std::int64_t r, const P1Table& table);

/// Rank over the presentation's field of a set of reduced coordinate vectors. Over Q the
/// vectors are scaled to integers and eliminated fraction-free (Bareiss).
std::size_t coordinate_rank(std::span<const CoordinateVector> vectors, const FieldSpec& field);

/// Rank of {T_i{0,oo} : 1 <= i <= imax} in H_1(X_0(p^n), cusps) tensor F.
std::size_t hecke_span_rank(const H1Presentation& pres, const P1Table& table, std::int64_t imax);
std::size_t hecke_span_rank(const PrimePower& pp, std::int64_t imax, FieldSpec field);

struct CriterionReport {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t d = 0;
  std::uint64_t s = 0;
  std::uint64_t l = 0;
  std::size_t required_rank = 0;
  std::size_t achieved_rank = 0;
  std::size_t quotient_dim = 0;
  bool pass = false;
  CriterionThreshold threshold;
  bool threshold_satisfied = false;
  bool l_equals_p = false;

  /// Independence fails although the threshold guarantees it.
  bool contradicts_guarantee() const { return threshold_satisfied && !pass; }
};

/// Checks F_l-independence of T_1{0,oo}, ..., T_{sd}{0,oo}.
CriterionReport check_rank_criterion(std::uint64_t p, unsigned n, std::uint64_t d, std::uint64_t l);

/// Same check for several l sharing one P^1 table.
std::vector<CriterionReport> check_rank_criterion(std::uint64_t p, unsigned n, std::uint64_t d,
                                                       std::span<const std::uint64_t> ls);

}  // namespace tbound
