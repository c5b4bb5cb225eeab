#pragma once

#include "tbound/arith.hpp"
#include "tbound/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tbound {

/// Trivial or quadratic Dirichlet character modulo N, extended by 0 off the units.
class DirichletCharacter {
 public:
  enum class Kind { trivial, quadratic };

  static DirichletCharacter trivial(std::uint64_t modulus);
  /// n -> (D/n), D a fundamental discriminant dividing the modulus.
  static DirichletCharacter quadratic(long discriminant, std::uint64_t modulus);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  long discriminant() const { return disc_; }
  int value(std::int64_t n) const;
  /// value(-1)
  int parity() const { return value(-1); }
  std::string to_string() const;

 private:
  Kind kind_ = Kind::trivial;
  std::uint64_t modulus_ = 1;
  long disc_ = 1;
};

/// eps(p) p^(lambda-1)
Integer nebentypus_factor(const DirichletCharacter& eps, std::uint64_t p, unsigned weight);

/// Truncated series a_0 + a_1 q + ... + a_T q^T. Coefficients up to reliable() are those
/// of the exact series; the ones between reliable() and truncation() are not to be compared.
template <class R>
class QExpansion {
 public:
  QExpansion(std::vector<R> coeffs, std::size_t reliable, unsigned weight, DirichletCharacter eps)
      : c_(std::move(coeffs)), reliable_(reliable), weight_(weight), eps_(eps) {
    if (c_.empty()) throw std::invalid_argument("empty q-expansion");
    reliable_ = std::min(reliable_, truncation());
  }

  static QExpansion zero(std::size_t truncation, unsigned weight, DirichletCharacter eps) {
    return QExpansion(std::vector<R>(truncation + 1, R(0)), truncation, weight, eps);
  }

  std::size_t truncation() const { return c_.size() - 1; }
  std::size_t reliable() const { return reliable_; }
  unsigned weight() const { return weight_; }
  const DirichletCharacter& character() const { return eps_; }
  const std::vector<R>& coeffs() const { return c_; }
  /// a_n, zero beyond the truncation.
  R coeff(std::size_t n) const { return n < c_.size() ? c_[n] : R(0); }
  void set(std::size_t n, const R& v) { c_.at(n) = v; }

  QExpansion& operator+=(const QExpansion& o) { return combine(o, [](R& x, const R& y) { x = x + y; }); }
  QExpansion& operator-=(const QExpansion& o) { return combine(o, [](R& x, const R& y) { x = x - y; }); }
  friend QExpansion operator+(QExpansion x, const QExpansion& y) { return x += y; }
  friend QExpansion operator-(QExpansion x, const QExpansion& y) { return x -= y; }
  friend QExpansion operator*(const R& k, QExpansion x) {
    for (auto& v : x.c_) v = k * v;
    return x;
  }

  /// Agreement up to the smaller reliable order.
  bool agrees_with(const QExpansion& o) const {
    std::size_t r = std::min(reliable_, o.reliable_);
    for (std::size_t n = 0; n <= r; ++n)
      if (!(c_[n] == o.c_[n])) return false;
    return true;
  }
  /// All coefficients up to the reliable order vanish.
  bool vanishes() const {
    for (std::size_t n = 0; n <= reliable_; ++n)
      if (!is_zero(c_[n])) return false;
    return true;
  }

 private:
  template <class Op>
  QExpansion& combine(const QExpansion& o, Op op) {
    std::size_t t = std::min(truncation(), o.truncation());
    c_.resize(t + 1);
    for (std::size_t n = 0; n <= t; ++n) op(c_[n], o.c_[n]);
    reliable_ = std::min({reliable_, o.reliable_, t});
    return *this;
  }

  std::vector<R> c_;
  std::size_t reliable_;
  unsigned weight_;
  DirichletCharacter eps_;
};

/// B_d: a_n -> a_{n/d}. Reliable to min(R d, T).
template <class R>
QExpansion<R> op_B(std::uint64_t d, const QExpansion<R>& f) {
  if (d < 1) throw std::invalid_argument("B_d needs d >= 1");
  const std::size_t t = f.truncation();
  std::vector<R> out(t + 1, R(0));
  for (std::size_t n = 0; n <= t; n += d) out[n] = f.coeff(n / d);
  return QExpansion<R>(std::move(out), std::min<std::size_t>(f.reliable() * d, t), f.weight(), f.character());
}

/// U_q: a_n -> a_{nq}. Truncation and reliable order divided by q.
template <class R>
QExpansion<R> op_U(std::uint64_t q, const QExpansion<R>& f) {
  if (!is_prime(q)) throw std::invalid_argument("U_q needs q prime");
  const std::size_t t = f.truncation() / q;
  std::vector<R> out(t + 1, R(0));
  for (std::size_t n = 0; n <= t; ++n) out[n] = f.coeff(n * q);
  return QExpansion<R>(std::move(out), f.reliable() / q, f.weight(), f.character());
}

/// t_p: a_n -> a_{np} + eps(p) p^(lambda-1) a_{n/p}.
template <class R>
QExpansion<R> op_t(std::uint64_t p, const QExpansion<R>& f) {
  if (!is_prime(p)) throw std::invalid_argument("t_p needs p prime");
  const R c(Rational(nebentypus_factor(f.character(), p, f.weight())));
  const std::size_t t = f.truncation() / p;
  std::vector<R> out(t + 1, R(0));
  for (std::size_t n = 0; n <= t; ++n) {
    out[n] = f.coeff(n * p);
    if (n % p == 0) out[n] = out[n] + c * f.coeff(n / p);
  }
  return QExpansion<R>(std::move(out), f.reliable() / p, f.weight(), f.character());
}

/// T_n built from t_p (equal to U_p when eps(p) = 0) through
/// T_{p^(k+1)} = t_p T_{p^k} - eps(p) p^(lambda-1) T_{p^(k-1)}, multiplicative in n.
template <class R>
QExpansion<R> op_T(std::uint64_t n, const QExpansion<R>& f) {
  if (n < 1) throw std::invalid_argument("T_n needs n >= 1");
  QExpansion<R> g = f;
  for (auto [p, k] : factorize(n)) {
    const R c(Rational(nebentypus_factor(f.character(), p, f.weight())));
    QExpansion<R> prev = g;
    QExpansion<R> cur = op_t(p, g);
    for (unsigned j = 1; j < k; ++j) {
      QExpansion<R> next = op_t(p, cur) - c * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    g = std::move(cur);
  }
  return g;
}

/// Normalised series with a_1 = 1 satisfying t_p f = a_p f for every prime p up to the
/// truncation, a_p supplied by `eigenvalue`.
template <class R>
QExpansion<R> formal_eigenform(std::size_t truncation, unsigned weight, const DirichletCharacter& eps,
                               const std::function<R(std::uint64_t)>& eigenvalue) {
  std::vector<R> a(truncation + 1, R(0));
  if (truncation >= 1) a[1] = R(1);
  for (std::size_t n = 2; n <= truncation; ++n) {
    auto fac = factorize(n);
    R value(1);
    for (auto [p, k] : fac) {
      const R ap = eigenvalue(p);
      const R c(Rational(nebentypus_factor(eps, p, weight)));
      R prev(1), cur = ap;
      for (unsigned j = 1; j < k; ++j) {
        R next = ap * cur - c * prev;
        prev = cur;
        cur = next;
      }
      value = value * cur;
    }
    a[n] = value;
  }
  return QExpansion<R>(std::move(a), truncation, weight, eps);
}

// --- relation checks ---

struct RelationCheck {
  std::string name;
  bool expect_equal = true;
  bool holds = false;                 // sides agree on every trial (or differ, for a witness)
  std::size_t min_compared_order = 0; // smallest reliable order actually compared
  std::size_t trials = 0;
  std::string witness;                // for inequality witnesses: the separating series
  bool pass() const { return holds; }
};

struct RelationReport {
  std::size_t order = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<RelationCheck> checks;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass(); });
  }
};

/// Seeded random series over Q with a_0 = 0, truncation = reliable = order.
QExpansion<Rational> random_series(std::size_t order, unsigned weight, const DirichletCharacter& eps,
                                   std::uint64_t seed);

/// Commutation relations among t_p, U_q, B_d plus U_q B_{q^k} = B_{q^(k-1)} on seeded
/// random series, and a search for a series separating t_3 B_3 from B_3 t_3.
RelationReport verify_relations(std::size_t order, std::size_t trials, std::uint64_t seed);

/// a_1(T_n f) = a_n(f) for 1 <= n <= nmax on seeded random series.
struct CoefficientIdentityReport {
  std::size_t nmax = 0;
  std::size_t trials = 0;
  std::vector<std::uint64_t> failures;
  bool pass() const { return failures.empty(); }
};
CoefficientIdentityReport verify_first_coefficient(std::size_t nmax, std::size_t order, std::size_t trials,
                                                   std::uint64_t seed);

}  // namespace tbound
