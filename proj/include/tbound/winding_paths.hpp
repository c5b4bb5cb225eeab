#pragma once

#include "tbound/hecke_symbols.hpp"
#include "tbound/residue_p1.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tbound {

enum class ChainLabel { A, B, Bprime };
enum class StopReason { hit_sigma_r, hit_leading_class, wrapped };

std::string to_string(ChainLabel label);
std::string to_string(StopReason reason);

struct ChainVertex {
  P1Index index;
  bool main_track;  // false for the sigma/tau intermediate between two main vertices
};

/// A walk through the sigma/tau graph of P^1(Z/p^n Z).
///
/// Main-track vertices are affine points (a : 1) whose residues move by -1 (chains A, B)
/// or +1 (chain B') per step. The walk stops at the first vertex lying in Sigma_r or equal
/// to (1 : r) (the start of chain B excepted). The interval holds the main vertices reached
/// before the stop; for chain A a main vertex also needs its sigma image reached.
struct Chain {
  ChainLabel label = ChainLabel::A;
  std::int64_t r = 0;
  P1Index start = 0;
  std::vector<ChainVertex> visited;
  std::uint64_t interval_start = 0;  // residue of the first main vertex
  std::uint64_t interval_length = 0;
  int direction = -1;                // -1 or +1 on residues
  StopReason stop_reason = StopReason::wrapped;
  std::optional<P1Index> stop_vertex;

  /// Interval residues in walk order.
  std::vector<std::uint64_t> interval(std::uint64_t modulus) const;
};

/// Chain A: from (1 : r).tau^2 = (-r-1 : 1), stepping by sigma then tau^2 (residue -1).
Chain walk_chain_A(std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r);

/// Chain B (p does not divide r): from (1 : r) itself, stepping by sigma tau^2.
Chain walk_chain_B(std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r);

/// Chain B' (p divides r): from (r : r-1) = (1 : r).sigma tau^2 sigma, stepping by tau sigma.
Chain walk_chain_B_prime(std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r);

/// walk_chain_B or walk_chain_B_prime according to whether p divides r.
Chain walk_second_chain(std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r);

/// Exact interval bounds with D as a free parameter:
///   chain A:      length >= p^n/D - D - 2   <=>  D*length >= p^n - D^2 - 2D
///   chains B, B': length >= p^n/D^2 - 2     <=>  D^2*length >= p^n - 2 D^2
struct IntervalBound {
  Rational bound;   // right-hand side
  bool in_regime;   // bound > 0
  bool satisfied;   // length >= bound
};
/// Out of regime when the bound is <= 0. Chain B at r = 1 is also out of regime: the
/// leading term of T_1{0,oo} is (0 : 1), which the walk from (1 : 1) meets at once.
IntervalBound chain_interval_bound(const Chain& chain, std::uint64_t modulus, std::int64_t D);

/// Structural checks on a walked chain: no non-stopping vertex in Sigma_r, interval
/// residues consecutive, and for chain A every sigma image of a main vertex recorded.
struct ChainAudit {
  bool avoids_sigma_r = true;
  bool consecutive = true;
  bool sigma_images_on_chain = true;
  bool ok() const { return avoids_sigma_r && consecutive && sigma_images_on_chain; }
};
ChainAudit audit_chain(const Chain& chain, const P1Table& table, const SigmaRSet& sigma_r);

// --- inverse pairs ---

/// A run of consecutive integers [start, start + length) inside {1, ..., p^n - 1}.
struct IntegerInterval {
  std::uint64_t start = 1;
  std::uint64_t length = 0;

  bool contains(std::uint64_t x) const { return x >= start && x - start < length; }
};

struct IntervalPair {
  IntegerInterval a;
  IntegerInterval b;
};

struct InversePair {
  std::uint64_t y;
  std::uint64_t z;
};

/// Smallest y in A prime to p with z = -y^{-1} mod p^n in B. Iterates over A when it is
/// the smaller interval, otherwise over B and minimises y over the hits.
std::optional<InversePair> find_inverse_pair(const IntervalPair& pair, const PrimePower& pp);

/// C' p^(3n/2) with C' = 8 for odd p and 8 sqrt(2) for p = 2, compared through squares:
/// (|A||B|)^2 >= squared_factor * p^(3n).
struct PairRequirement {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::string c_prime;
  Integer squared_factor;  // 64 or 128
  Integer p_cubed_n;
  Integer min_product;     // smallest integer product meeting the requirement

  bool satisfied_by(const Integer& product) const {
    return sgn(product) > 0 && product * product >= squared_factor * p_cubed_n;
  }
};

PairRequirement pair_requirement(const PrimePower& pp);

}  // namespace tbound
