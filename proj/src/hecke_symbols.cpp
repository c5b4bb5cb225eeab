#include "tbound/hecke_symbols.hpp"

#include <stdexcept>

namespace tbound {

SymbolVector winding_image(std::int64_t r, const P1Table& table) {
  if (r < 1) throw std::invalid_argument("winding_image needs r >= 1");
  SymbolVector out(table.size());
  for_each_hecke_tuple(r, [&](const HeckeTuple& m) {
    if (auto idx = table.index_of_pair(m.w, m.t)) out.add(*idx, 1);
  });
  return out;
}

TupleCensus winding_tuple_census(std::int64_t r, const P1Table& table) {
  TupleCensus census;
  for_each_hecke_tuple(r, [&](const HeckeTuple& m) {
    ++census.tuples;
    if (!table.index_of_pair(m.w, m.t)) ++census.dropped;
  });
  return census;
}

SigmaRSet sigma_r_set(std::int64_t r, const P1Table& table) {
  if (r < 1) throw std::invalid_argument("sigma_r_set needs r >= 1");
  SigmaRSet out;
  out.r = r;
  for (std::int64_t t = 1; t <= r; ++t) {
    for (std::int64_t w = 0; w < t; ++w) {
      bool admissible = false;
      // ut - vw >= u + t - 1 bounds u
      for (std::int64_t u = 1; u + t <= r + 1 && !admissible; ++u) {
        for (std::int64_t v = 0; v < u; ++v) {
          std::int64_t det = u * t - v * w;
          if (det >= 1 && det <= r) {
            admissible = true;
            break;
          }
        }
      }
      if (!admissible) continue;
      if (auto idx = table.index_of_pair(w, t)) out.members.insert(*idx);
    }
  }
  if (auto lead = table.index_of_pair(1, r)) out.members.erase(*lead);
  return out;
}

namespace {

std::size_t rank_mod_l(std::vector<std::vector<std::uint32_t>> rows, std::uint64_t l) {
  PrimeField f(l);
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    auto inv = f.inv(rows[rank][c]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      auto factor = f.mul(rows[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub_mul(rows[i][j], factor, rows[rank][j]);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational_fraction_free(const std::vector<std::vector<Rational>>& input) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : input) {
    Integer lcm = 1;
    for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(row.size());
    for (const auto& x : row) ints.push_back(x.get_num() * (lcm / x.get_den()));
    rows.push_back(std::move(ints));
  }
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer num = rows[rank][c] * rows[i][j] - rows[i][c] * rows[rank][j];
        mpz_divexact(rows[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    prev = rows[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t coordinate_rank(std::span<const CoordinateVector> vectors, const FieldSpec& field) {
  if (vectors.empty()) return 0;
  if (field.is_rational()) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vectors) rows.push_back(std::get<std::vector<Rational>>(v));
    return rank_rational_fraction_free(rows);
  }
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& v : vectors) rows.push_back(std::get<std::vector<std::uint32_t>>(v));
  return rank_mod_l(std::move(rows), field.l);
}

std::size_t hecke_span_rank(const H1Presentation& pres, const P1Table& table, std::int64_t imax) {
  std::vector<CoordinateVector> images;
  for (std::int64_t i = 1; i <= imax; ++i) images.push_back(pres.reduce(winding_image(i, table)));
  return coordinate_rank(images, pres.field());
}

std::size_t hecke_span_rank(const PrimePower& pp, std::int64_t imax, FieldSpec field) {
  if (imax <= 0) return 0;
  P1Table table(pp);
  return hecke_span_rank(build_presentation(table, field), table, imax);
}

std::vector<CriterionReport> check_rank_criterion(std::uint64_t p, unsigned n, std::uint64_t d,
                                                       std::span<const std::uint64_t> ls) {
  PrimePower pp(p, n);
  P1Table table(pp);
  auto threshold = criterion_threshold(p, d);
  const auto required = static_cast<std::int64_t>(threshold.s * d);
  auto relations = invariant_generators(table);
  std::vector<SymbolVector> images;
  for (std::int64_t i = 1; i <= required; ++i) images.push_back(winding_image(i, table));

  std::vector<CriterionReport> out;
  for (auto l : ls) {
    H1Presentation pres(relations, FieldSpec::prime(l));
    std::vector<CoordinateVector> coords;
    for (const auto& img : images) coords.push_back(pres.reduce(img));
    CriterionReport rep;
    rep.p = p;
    rep.n = n;
    rep.d = d;
    rep.s = threshold.s;
    rep.l = l;
    rep.required_rank = static_cast<std::size_t>(required);
    rep.achieved_rank = coordinate_rank(coords, pres.field());
    rep.quotient_dim = pres.quotient_dim();
    rep.pass = rep.achieved_rank == rep.required_rank;
    rep.threshold = threshold;
    rep.threshold_satisfied = threshold.satisfied_by(pp.modulus());
    rep.l_equals_p = (l == p);
    out.push_back(rep);
  }
  return out;
}

CriterionReport check_rank_criterion(std::uint64_t p, unsigned n, std::uint64_t d, std::uint64_t l) {
  std::uint64_t ls[] = {l};
  return check_rank_criterion(p, n, d, ls).front();
}

}  // namespace tbound
