#pragma once

#include "tbound/field.hpp"
#include "tbound/residue_p1.hpp"
#include "tbound/sparse_echelon.hpp"
#include "tbound/symbol_vector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tbound {

/// Generators of Z[P^1]^sigma + Z[P^1]^tau: one 0/1 row per orbit (orbit sums, fixed
/// points as single entries). Rows are listed sigma-orbits first, then tau-orbits,
/// each family ordered by the smallest index in the orbit.
struct RelationSpan {
  enum class Source : std::uint8_t { sigma, tau };
  struct Row {
    Source source;
    std::vector<P1Index> support;  // ascending
  };

  std::size_t p1_size = 0;
  std::vector<Row> rows;

  std::size_t sigma_rows() const;
  std::size_t tau_rows() const;
};

RelationSpan invariant_generators(const P1Table& table);

/// Coordinates of a reduced vector in the quotient basis, one entry per free column.
using CoordinateVector = std::variant<std::vector<Rational>, std::vector<std::uint32_t>>;

bool is_zero(const CoordinateVector& v);

/// H_1(X_0(p^n), cusps; F) presented as F[P^1] modulo the invariant submodules.
class H1Presentation {
 public:
  template <class Field>
  struct Core {
    SparseEchelon<Field> echelon;
    std::vector<P1Index> free_columns;            // ascending; quotient basis
    std::vector<std::int64_t> coordinate_of_column;  // -1 on pivot columns
  };

  H1Presentation(const RelationSpan& relations, FieldSpec field);

  const FieldSpec& field() const { return field_; }
  std::size_t p1_size() const { return p1_size_; }
  std::size_t relation_rank() const { return relation_rank_; }
  std::size_t quotient_dim() const { return free_columns().size(); }
  const std::vector<P1Index>& free_columns() const;

  /// Image of v in the quotient. Throws std::invalid_argument on a table size mismatch.
  CoordinateVector reduce(const SymbolVector& v) const;

  const std::variant<Core<RationalField>, Core<PrimeField>>& core() const { return core_; }

 private:
  FieldSpec field_;
  std::size_t p1_size_;
  std::size_t relation_rank_;
  std::variant<Core<RationalField>, Core<PrimeField>> core_;
};

H1Presentation build_presentation(const P1Table& table, FieldSpec field);

inline CoordinateVector reduce_vector(const SymbolVector& v, const H1Presentation& pres) {
  return pres.reduce(v);
}

/// Default column cap for dense Smith form; overridden by the SMITH_CAP environment variable.
std::size_t smith_cap_from_env();

/// Nonzero elementary divisors (positive, in divisibility order) of an integer matrix.
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> matrix);

/// Smith invariants of the relation matrix. Throws std::length_error above the column cap.
std::vector<Integer> smith_invariants(const RelationSpan& rel, std::size_t cap = smith_cap_from_env());

// --- cusps of X_0(N) ---

/// The cusp a/c in lowest terms with c >= 0; infinity is 1/0.
struct Cusp {
  std::int64_t a = 0;
  std::int64_t c = 1;

  static Cusp make(std::int64_t a, std::int64_t c);
  static Cusp zero() { return {0, 1}; }
  static Cusp infinity() { return {1, 0}; }

  std::string to_string() const;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// Gamma_0(N)-equivalence of cusps: with a_j s_j = 1 mod c_j, the cusps are
/// equivalent iff s_1 c_2 = s_2 c_1 mod gcd(c_1 c_2, N).
bool cusp_equivalent(const Cusp& x, const Cusp& y, std::int64_t level);

struct CuspClassCount {
  Cusp representative;  // first image met in the class
  std::uint64_t multiplicity;
};

/// T_r applied to a cusp via the matrices (r/delta, -beta; 0, delta), delta | r,
/// 0 <= beta < delta, with images grouped into Gamma_0(N) classes in order of appearance.
/// Throws std::invalid_argument when gcd(r, N) != 1.
std::vector<CuspClassCount> hecke_cusp_action(std::int64_t level, std::int64_t r, const Cusp& x);

}  // namespace tbound
