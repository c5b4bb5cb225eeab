#include "tbound/rel_homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace tbound {

std::size_t RelationSpan::sigma_rows() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.source == Source::sigma; }));
}

std::size_t RelationSpan::tau_rows() const { return rows.size() - sigma_rows(); }

namespace {

void add_orbit_rows(const std::vector<P1Index>& perm, RelationSpan::Source source, RelationSpan& out,
                    std::set<std::vector<P1Index>>& seen) {
  std::vector<std::uint8_t> done(perm.size(), 0);
  for (P1Index x = 0; x < perm.size(); ++x) {
    if (done[x]) continue;
    std::vector<P1Index> orbit;
    for (P1Index y = x; !done[y]; y = perm[y]) {
      done[y] = 1;
      orbit.push_back(y);
    }
    std::sort(orbit.begin(), orbit.end());
    if (seen.insert(orbit).second) out.rows.push_back({source, std::move(orbit)});
  }
}

}  // namespace

RelationSpan invariant_generators(const P1Table& table) {
  RelationSpan out;
  out.p1_size = table.size();
  std::set<std::vector<P1Index>> seen;
  add_orbit_rows(table.sigma_perm(), RelationSpan::Source::sigma, out, seen);
  add_orbit_rows(table.tau_perm(), RelationSpan::Source::tau, out, seen);
  return out;
}

bool is_zero(const CoordinateVector& v) {
  return std::visit(
      [](const auto& vec) {
        return std::all_of(vec.begin(), vec.end(), [](const auto& x) { return x == 0; });
      },
      v);
}

namespace {

template <class Field>
H1Presentation::Core<Field> echelonize(const RelationSpan& relations, Field field) {
  SparseEchelon<Field> echelon(field, relations.p1_size);
  for (const auto& row : relations.rows) {
    SparseRow<typename Field::Elem> sparse;
    sparse.reserve(row.support.size());
    for (P1Index idx : row.support) sparse.push_back({idx, field.one()});
    echelon.insert(sparse);
  }
  std::vector<P1Index> free_columns;
  std::vector<std::int64_t> coord(relations.p1_size, -1);
  for (P1Index c = 0; c < relations.p1_size; ++c) {
    if (echelon.is_pivot(c)) continue;
    coord[c] = static_cast<std::int64_t>(free_columns.size());
    free_columns.push_back(c);
  }
  return {std::move(echelon), std::move(free_columns), std::move(coord)};
}

}  // namespace

H1Presentation::H1Presentation(const RelationSpan& relations, FieldSpec field)
    : field_(field),
      p1_size_(relations.p1_size),
      relation_rank_(0),
      core_(field.is_rational()
                ? std::variant<Core<RationalField>, Core<PrimeField>>(echelonize(relations, RationalField{}))
                : std::variant<Core<RationalField>, Core<PrimeField>>(
                      echelonize(relations, PrimeField(field.l)))) {
  relation_rank_ = std::visit([](const auto& core) { return core.echelon.rank(); }, core_);
}

const std::vector<P1Index>& H1Presentation::free_columns() const {
  return std::visit([](const auto& core) -> const std::vector<P1Index>& { return core.free_columns; },
                    core_);
}

CoordinateVector H1Presentation::reduce(const SymbolVector& v) const {
  if (v.p1_size() != p1_size_)
    throw std::invalid_argument("symbol vector built on a different P^1 table");
  return std::visit(
      [&](const auto& core) -> CoordinateVector {
        const auto& field = core.echelon.field();
        using Elem = typename std::decay_t<decltype(field)>::Elem;
        SparseRow<Elem> row;
        for (auto [idx, c] : v.terms()) row.push_back({idx, field.from_int(c)});
        auto reduced = core.echelon.reduce_sparse(row);
        std::vector<Elem> coords(core.free_columns.size(), field.zero());
        for (auto& e : reduced) coords[core.coordinate_of_column[e.col]] = e.value;
        return coords;
      },
      core_);
}

H1Presentation build_presentation(const P1Table& table, FieldSpec field) {
  return H1Presentation(invariant_generators(table), field);
}

std::size_t smith_cap_from_env() {
  if (const char* env = std::getenv("SMITH_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("SMITH_CAP is not a number: ") + env);
    }
  }
  return 5000;
}

std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<Integer> out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(a[i][j]) != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (sgn(a[i][t]) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (sgn(a[i][t]) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (sgn(a[t][j]) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (sgn(a[t][j]) != 0) clean = false;
    }
    if (!clean) continue;

    // the pivot must divide the whole trailing block
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
          for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    out.push_back(abs(a[t][t]));
    ++t;
  }
  return out;
}

std::vector<Integer> smith_invariants(const RelationSpan& rel, std::size_t cap) {
  if (rel.p1_size > cap)
    throw std::length_error("Smith form size cap exceeded: " + std::to_string(rel.p1_size) + " columns > " +
                            std::to_string(cap));
  std::vector<std::vector<Integer>> dense(rel.rows.size(), std::vector<Integer>(rel.p1_size, 0));
  for (std::size_t i = 0; i < rel.rows.size(); ++i)
    for (P1Index c : rel.rows[i].support) dense[i][c] = 1;
  return smith_invariants(std::move(dense));
}

// --- cusps ---

Cusp Cusp::make(std::int64_t a, std::int64_t c) {
  if (a == 0 && c == 0) throw std::invalid_argument("0/0 is not a cusp");
  std::int64_t g = gcd64(a, c);
  a /= g;
  c /= g;
  if (c < 0 || (c == 0 && a < 0)) {
    a = -a;
    c = -c;
  }
  return {a, c};
}

std::string Cusp::to_string() const {
  if (c == 0) return "oo";
  if (c == 1) return std::to_string(a);
  return std::to_string(a) + "/" + std::to_string(c);
}

namespace {

// s with a*s = 1 mod c (c >= 0); for c in {0, 1} any s works and we take a's own inverse sign.
std::int64_t cusp_s(const Cusp& x) {
  if (x.c == 0) return x.a;  // a = 1
  if (x.c == 1) return 0;
  auto inv = inverse_mod(reduce_mod(x.a, static_cast<std::uint64_t>(x.c)), static_cast<std::uint64_t>(x.c));
  return static_cast<std::int64_t>(*inv);
}

}  // namespace

bool cusp_equivalent(const Cusp& x, const Cusp& y, std::int64_t level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  std::int64_t modulus = gcd64(static_cast<std::int64_t>(static_cast<__int128>(x.c) * y.c % level), level);
  if (x.c == 0 || y.c == 0) modulus = level;
  __int128 lhs = static_cast<__int128>(cusp_s(x)) * y.c;
  __int128 rhs = static_cast<__int128>(cusp_s(y)) * x.c;
  __int128 diff = (lhs - rhs) % modulus;
  return diff == 0;
}

std::vector<CuspClassCount> hecke_cusp_action(std::int64_t level, std::int64_t r, const Cusp& x) {
  if (r < 1) throw std::invalid_argument("Hecke index must be positive");
  if (gcd64(r, level) != 1)
    throw std::invalid_argument("r = " + std::to_string(r) + " is not coprime to N = " + std::to_string(level));
  std::vector<CuspClassCount> classes;
  for (std::uint64_t delta : divisors(static_cast<std::uint64_t>(r))) {
    auto d = static_cast<std::int64_t>(delta);
    for (std::int64_t beta = 0; beta < d; ++beta) {
      // (r/delta, -beta; 0, delta) . (a : c)
      Cusp image = Cusp::make((r / d) * x.a - beta * x.c, d * x.c);
      auto it = std::find_if(classes.begin(), classes.end(), [&](const CuspClassCount& k) {
        return cusp_equivalent(k.representative, image, level);
      });
      if (it == classes.end())
        classes.push_back({image, 1});
      else
        ++it->multiplicity;
    }
  }
  return classes;
}

}  // namespace tbound
