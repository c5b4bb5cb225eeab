#include "tbound/bounds.hpp"

#include <stdexcept>

namespace tbound {

namespace {

Integer word(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

Rational frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

void require_degree(std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("degree d must be >= 1");
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) throw std::invalid_argument(std::string(what) + " must be prime: " + std::to_string(p));
}

}  // namespace

CriterionThreshold criterion_threshold(std::uint64_t p, std::uint64_t d) {
  require_prime(p, "p");
  require_degree(d);
  CriterionThreshold t;
  t.p = p;
  t.d = d;
  t.s = smallest_prime_other_than(p);
  t.c_squared = p == 2 ? 129 : 65;
  t.threshold = Integer(t.c_squared) * ipow(word(t.s * d), 6);
  return t;
}

Integer point_bound(std::uint64_t l, std::uint64_t d) {
  require_prime(l, "l");
  require_degree(d);
  return 2 * (1 + ipow(word(l), d));
}

WeilBound weil_bound(std::uint64_t l, std::uint64_t d) {
  require_prime(l, "l");
  require_degree(d);
  WeilBound w;
  w.radicand = ipow(word(l), d);
  w.rational_part = w.radicand + 1;
  w.is_integer = (d % 2 == 0);
  // floor(2 sqrt(x)) = floor(sqrt(4x))
  Integer twice_root;
  Integer four_x = 4 * w.radicand;
  mpz_sqrt(twice_root.get_mpz_t(), four_x.get_mpz_t());
  w.floor_value = w.rational_part + twice_root;
  return w;
}

std::vector<BoundReport> point_bound_variants(std::uint64_t l, std::uint64_t d) {
  std::vector<BoundReport> out;
  Integer ld = ipow(word(l), d);
  out.push_back({"point_bound.main", 0, d, l, "all", point_bound(l, d), {"2(1 + l^d)"}});

  auto weil = weil_bound(l, d);
  BoundReport good{"point_bound.good_reduction", 0, d, l, "good", weil.floor_value, {}};
  good.notes.push_back(weil.is_integer ? "(l^(d/2) + 1)^2, exact integer"
                                       : "floor of (l^(d/2) + 1)^2 = " + weil.rational_part.get_str() +
                                             " + 2*sqrt(" + weil.radicand.get_str() + ")");
  out.push_back(good);

  out.push_back({"point_bound.additive", 5, d, l, "additive, p >= 5", Integer(1), {"component group order <= 4"}});
  out.push_back({"point_bound.additive", 3, d, l, "additive, p = 3", Integer(3), {}});
  out.push_back({"point_bound.additive", 2, d, l, "additive, p = 2", Integer(4), {}});
  out.push_back({"point_bound.twisted_multiplicative", 0, d, l, "twisted, neutral component", 1 + ld, {"1 + l^d"}});
  out.push_back({"point_bound.twisted_multiplicative", 2, d, l, "twisted, other component",
                 2 * (1 + ipow(Integer(3), d)), {"2(1 + 3^d), only for p = 2"}});
  out.push_back({"point_bound.split_multiplicative", 0, d, l, "split, neutral component", ld - 1, {"l^d - 1"}});
  return out;
}

LevelCase level_case(std::uint64_t p) {
  require_prime(p, "p");
  if (p == 2) return LevelCase::p_eq_2;
  if (p == 3) return LevelCase::p_eq_3;
  return LevelCase::p_ge_5;
}

std::string to_string(LevelCase c) {
  switch (c) {
    case LevelCase::p_ge_5: return "p_ge_5";
    case LevelCase::p_eq_3: return "p_eq_3";
    case LevelCase::p_eq_2: return "p_eq_2";
  }
  return "unknown";
}

std::uint64_t auxiliary_prime(std::uint64_t p) { return p == 3 ? 5 : 3; }

Integer level_bound(std::uint64_t p, std::uint64_t d, bool original_order) {
  require_degree(d);
  Integer value;
  switch (level_case(p)) {
    case LevelCase::p_ge_5: value = 65 * (ipow(Integer(3), d) - 1) * ipow(word(2 * d), 6); break;
    case LevelCase::p_eq_3: value = 65 * (ipow(Integer(5), d) - 1) * ipow(word(2 * d), 6); break;
    case LevelCase::p_eq_2: value = 129 * (ipow(Integer(3), d) - 1) * ipow(word(3 * d), 6); break;
  }
  if (original_order) value *= ipow(word(auxiliary_prime(p)), d) - 1;
  return value;
}

BoundReport level_report(std::uint64_t p, std::uint64_t d, bool original_order) {
  BoundReport r;
  auto c = level_case(p);
  r.formula = "level_bound." + to_string(c);
  r.p = p;
  r.d = d;
  r.l = auxiliary_prime(p);
  r.case_tag = to_string(c);
  r.value = level_bound(p, d, original_order);
  switch (c) {
    case LevelCase::p_ge_5: r.notes.push_back("65 (3^d - 1) (2d)^6"); break;
    case LevelCase::p_eq_3: r.notes.push_back("65 (5^d - 1) (2d)^6"); break;
    case LevelCase::p_eq_2: r.notes.push_back("129 (3^d - 1) (3d)^6"); break;
  }
  if (original_order) r.notes.push_back("multiplied by (l^d - 1) for the original order");
  return r;
}

ConstantsReport constants_consistency() {
  ConstantsReport r;
  r.lambda = frac(42119, 42120) * frac(379079, 379080);
  r.lambda_below_one = r.lambda < 1;
  Rational lambda_sq = r.lambda * r.lambda;
  r.odd_ratio = Rational(64) / lambda_sq;
  r.even_ratio = Rational(128) / lambda_sq;
  r.odd_ok = r.odd_ratio <= 65;
  r.even_ok = r.even_ratio <= 129;
  r.odd_margin = 65 - r.odd_ratio;
  r.even_margin = 129 - r.even_ratio;

  const Integer D = 6;
  const Integer d4 = ipow(D, 4), d5 = ipow(D, 5);
  // p^n/D^2 >= 65 D^4 >= 84240, hence p^n/D^2 - 2 >= (1 - 2/84240) p^n/D^2
  r.a_step_ok = 65 * d4 >= 84240 && 84240 == 2 * 42120 && Rational(1) - frac(2, 84240) == frac(42119, 42120);
  r.d_plus_two_step_ok = Rational(D + 2) <= frac(4, 3) * Rational(D);
  // p^n >= 65 D^6 only gives p^n/D >= 65 D^5, and 65 D^5/(D+2) is smallest at D = 6
  r.b_step_as_printed_ok = 65 * d5 >= 379080 * (D + 2);
  Integer k = 65 * d5 / (D + 2);
  r.b_step_derivable_constant = k.get_ui();
  r.lambda_derivable = frac(42119, 42120) * frac(k - 1, k);
  Rational derivable_sq = r.lambda_derivable * r.lambda_derivable;
  r.derivable_odd_ok = Rational(64) / derivable_sq <= 65;
  r.derivable_even_ok = Rational(128) / derivable_sq <= 129;
  return r;
}

}  // namespace tbound
