#pragma once

#include "tbound/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tbound {

/// Evaluated closed-form bound with its inputs.
struct BoundReport {
  std::string formula;      // identifier, e.g. "level_bound.p_ge_5"
  std::uint64_t p = 0;      // 0 when not applicable
  std::uint64_t d = 0;
  std::uint64_t l = 0;      // 0 when not applicable
  std::string case_tag;
  Integer value;
  std::vector<std::string> notes;
};

/// Threshold of the independence criterion: C^2 (s d)^6 with s the smallest prime != p and
/// C^2 = 129 for p = 2, 65 otherwise.
struct CriterionThreshold {
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  std::uint64_t s = 0;
  unsigned c_squared = 0;
  Integer threshold;

  /// Non-strict comparison p^n >= threshold.
  bool satisfied_by(const Integer& modulus) const { return modulus >= threshold; }
};

CriterionThreshold criterion_threshold(std::uint64_t p, std::uint64_t d);

/// 2(1 + l^d). Throws std::invalid_argument for d = 0 or l not prime.
Integer point_bound(std::uint64_t l, std::uint64_t d);

/// (l^(d/2) + 1)^2 = l^d + 1 + 2 sqrt(l^d), kept exact.
struct WeilBound {
  Integer rational_part;   // l^d + 1
  Integer radicand;        // l^d; the value is rational_part + 2*sqrt(radicand)
  bool is_integer = false; // d even
  Integer floor_value;     // exact floor
};

/// Main bound plus the reduction-type refinements (good, additive, twisted, split).
std::vector<BoundReport> point_bound_variants(std::uint64_t l, std::uint64_t d);
WeilBound weil_bound(std::uint64_t l, std::uint64_t d);

enum class LevelCase { p_ge_5, p_eq_3, p_eq_2 };
LevelCase level_case(std::uint64_t p);
std::string to_string(LevelCase c);

/// Auxiliary prime used for the reduction argument: 5 when p = 3, else 3.
std::uint64_t auxiliary_prime(std::uint64_t p);

/// p^n bound for a point of order p^n over a degree-d field. With original_order the
/// bound is multiplied by (l^d - 1) to account for the passage to the quotient curve.
Integer level_bound(std::uint64_t p, std::uint64_t d, bool original_order = false);
BoundReport level_report(std::uint64_t p, std::uint64_t d, bool original_order = false);

/// Exact check of the constant bookkeeping that turns the inverse-pair bound into the
/// threshold C^2 (sd)^6.
struct ConstantsReport {
  Rational lambda;                  // (42119/42120)(379079/379080)
  bool lambda_below_one = false;
  Rational odd_ratio;               // 64 / lambda^2
  bool odd_ok = false;              // <= 65
  Rational odd_margin;              // 65 - 64/lambda^2
  Rational even_ratio;              // 128 / lambda^2
  bool even_ok = false;             // <= 129
  Rational even_margin;

  // interval-size prerequisites, checked at the smallest admissible D = 6
  bool a_step_ok = false;           // p^n/D^2 >= 65 D^4 >= 84240 = 2*42120
  bool d_plus_two_step_ok = false;  // D + 2 <= (4/3) D for D >= 6
  bool b_step_as_printed_ok = false;  // p^n/D >= 379080 (D+2) from p^n >= 65 D^6
  std::uint64_t b_step_derivable_constant = 0;  // largest K with p^n/D >= K (D+2) at D = 6
  Rational lambda_derivable;        // (42119/42120)(K-1)/K with that K
  bool derivable_odd_ok = false;
  bool derivable_even_ok = false;

  bool pass() const { return lambda_below_one && odd_ok && even_ok; }
};

ConstantsReport constants_consistency();

}  // namespace tbound
