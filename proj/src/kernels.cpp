#include "tbound/kernels.hpp"

#include <memory>

namespace tbound {

std::vector<SymbolVector> winding_images_serial(const P1Table& table, std::int64_t rmax) {
  std::vector<SymbolVector> out;
  for (std::int64_t r = 1; r <= rmax; ++r) out.push_back(winding_image(r, table));
  return out;
}

std::vector<SymbolVector> winding_images_omp(const P1Table& table, std::int64_t rmax) {
  if (rmax <= 0) return {};
  std::vector<SymbolVector> out(static_cast<std::size_t>(rmax), SymbolVector(table.size()));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 1; r <= rmax; ++r) out[static_cast<std::size_t>(r - 1)] = winding_image(r, table);
  return out;
}

std::vector<CoordinateVector> reduce_batch_serial(const H1Presentation& pres, const std::vector<SymbolVector>& vs) {
  std::vector<CoordinateVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(pres.reduce(v));
  return out;
}

std::vector<CoordinateVector> reduce_batch_omp(const H1Presentation& pres, const std::vector<SymbolVector>& vs) {
  std::vector<CoordinateVector> out(vs.size());
  const auto n = static_cast<std::int64_t>(vs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = pres.reduce(vs[static_cast<std::size_t>(i)]);
  return out;
}

namespace {

struct ScanShape {
  std::uint64_t modulus;
  std::uint64_t starts_a;
  std::uint64_t starts_b;
};

ScanShape scan_shape(const PrimePower& pp, std::uint64_t la, std::uint64_t lb) {
  const std::uint64_t m = pp.modulus_word();
  if (la < 1 || lb < 1 || la > m - 1 || lb > m - 1)
    throw std::invalid_argument("interval lengths must lie in 1..p^n-1");
  // starts s with s + len - 1 <= m - 1
  return {m, m - la, m - lb};
}

InversePairScan scan_header(const ScanShape& s, std::uint64_t la, std::uint64_t lb) {
  InversePairScan out;
  out.modulus = s.modulus;
  out.length_a = la;
  out.length_b = lb;
  out.pairs_checked = s.starts_a * s.starts_b;
  return out;
}

}  // namespace

InversePairScan inverse_pair_scan_serial(const PrimePower& pp, std::uint64_t length_a, std::uint64_t length_b) {
  auto shape = scan_shape(pp, length_a, length_b);
  auto out = scan_header(shape, length_a, length_b);
  for (std::uint64_t a = 1; a <= shape.starts_a; ++a)
    for (std::uint64_t b = 1; b <= shape.starts_b; ++b) {
      IntervalPair pair{{a, length_a}, {b, length_b}};
      if (!find_inverse_pair(pair, pp)) out.counterexamples.push_back(pair);
    }
  return out;
}

InversePairScan inverse_pair_scan_omp(const PrimePower& pp, std::uint64_t length_a, std::uint64_t length_b) {
  auto shape = scan_shape(pp, length_a, length_b);
  auto out = scan_header(shape, length_a, length_b);
  std::vector<std::vector<IntervalPair>> per_row(shape.starts_a);
  const auto rows = static_cast<std::int64_t>(shape.starts_a);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < rows; ++i) {
    const std::uint64_t a = static_cast<std::uint64_t>(i) + 1;
    for (std::uint64_t b = 1; b <= shape.starts_b; ++b) {
      IntervalPair pair{{a, length_a}, {b, length_b}};
      if (!find_inverse_pair(pair, pp)) per_row[static_cast<std::size_t>(i)].push_back(pair);
    }
  }
  for (auto& row : per_row) out.counterexamples.insert(out.counterexamples.end(), row.begin(), row.end());
  return out;
}

std::vector<PathSweepRow> path_instance(const P1Table& table, std::int64_t r) {
  const auto& pp = table.prime_power();
  auto sigma_r = sigma_r_set(r, table);
  std::vector<PathSweepRow> rows;
  for (int which = 0; which < 2; ++which) {
    Chain chain = which == 0 ? walk_chain_A(r, table, sigma_r) : walk_second_chain(r, table, sigma_r);
    auto bound = chain_interval_bound(chain, table.modulus(), r);
    PathSweepRow row;
    row.p = table.p();
    row.n = pp.n();
    row.r = r;
    row.chain = to_string(chain.label);
    row.interval_len = chain.interval_length;
    row.bound = bound.bound;
    row.in_regime = bound.in_regime;
    row.bound_ok = bound.satisfied;
    row.audit_ok = audit_chain(chain, table, sigma_r).ok();
    row.stop_reason = to_string(chain.stop_reason);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PathSweepRow> path_sweep_serial(const std::vector<PrimePower>& moduli, std::int64_t rmax) {
  std::vector<PathSweepRow> out;
  for (const auto& pp : moduli) {
    P1Table table(pp);
    for (std::int64_t r = 1; r <= rmax; ++r) {
      auto rows = path_instance(table, r);
      out.insert(out.end(), rows.begin(), rows.end());
    }
  }
  return out;
}

std::vector<PathSweepRow> path_sweep_omp(const std::vector<PrimePower>& moduli, std::int64_t rmax) {
  if (rmax <= 0) return {};
  std::vector<std::unique_ptr<P1Table>> tables;
  for (const auto& pp : moduli) tables.push_back(std::make_unique<P1Table>(pp));
  const auto per = static_cast<std::size_t>(rmax);
  const auto jobs = static_cast<std::int64_t>(tables.size() * per);
  std::vector<std::vector<PathSweepRow>> slots(static_cast<std::size_t>(jobs));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < jobs; ++j) {
    auto idx = static_cast<std::size_t>(j);
    slots[idx] = path_instance(*tables[idx / per], static_cast<std::int64_t>(idx % per) + 1);
  }
  std::vector<PathSweepRow> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace tbound
