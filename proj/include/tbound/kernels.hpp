#pragma once

#include "tbound/hecke_symbols.hpp"
#include "tbound/rel_homology.hpp"
#include "tbound/winding_paths.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Data-parallel loops with a serial reference next to each OpenMP version. Both produce
// identical output in identical order.

namespace tbound {

/// T_r{0,oo} for r = 1..rmax.
std::vector<SymbolVector> winding_images_serial(const P1Table& table, std::int64_t rmax);
std::vector<SymbolVector> winding_images_omp(const P1Table& table, std::int64_t rmax);

std::vector<CoordinateVector> reduce_batch_serial(const H1Presentation& pres, const std::vector<SymbolVector>& vs);
std::vector<CoordinateVector> reduce_batch_omp(const H1Presentation& pres, const std::vector<SymbolVector>& vs);

struct InversePairScan {
  std::uint64_t modulus = 0;
  std::uint64_t length_a = 0;
  std::uint64_t length_b = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<IntervalPair> counterexamples;  // ordered by (A start, B start)
};

/// find_inverse_pair on every pair of intervals of the given lengths inside {1..p^n-1}.
InversePairScan inverse_pair_scan_serial(const PrimePower& pp, std::uint64_t length_a, std::uint64_t length_b);
InversePairScan inverse_pair_scan_omp(const PrimePower& pp, std::uint64_t length_a, std::uint64_t length_b);

struct PathSweepRow {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::int64_t r = 0;
  std::string chain;
  std::uint64_t interval_len = 0;
  Rational bound;
  bool in_regime = false;
  bool bound_ok = false;   // length >= bound (meaningful only in regime)
  bool audit_ok = false;   // Sigma_r avoided, residues consecutive, sigma images on chain A
  std::string stop_reason;

  /// Audit holds and, in regime, the bound holds.
  bool pass() const { return audit_ok && (!in_regime || bound_ok); }
};

/// Chain A and the second chain for every (p^n, r), r = 1..rmax, with D = r.
std::vector<PathSweepRow> path_sweep_serial(const std::vector<PrimePower>& moduli, std::int64_t rmax);
std::vector<PathSweepRow> path_sweep_omp(const std::vector<PrimePower>& moduli, std::int64_t rmax);

/// Rows for one instance (both chains).
std::vector<PathSweepRow> path_instance(const P1Table& table, std::int64_t r);

}  // namespace tbound
