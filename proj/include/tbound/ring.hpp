#pragma once

#include "tbound/arith.hpp"

#include <string>
#include <vector>

namespace tbound {

// Coefficient rings for q-expansions and oldclass matrices. Every ring provides
// construction from Rational, + - *, unary -, ==, exact division by a nonzero
// integer (div_int), is_zero and to_string.

inline Rational div_int(const Rational& x, const Integer& k) { return x / Rational(k); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
std::string to_string(const Rational& x);

/// a + b sqrt(D) with D squarefree, D != 0, 1. D = 0 marks an element with b = 0 that
/// has not been tied to a field yet; it adopts the radicand of whatever it meets.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(long v) : a_(v) {}
  Quadratic(const Rational& a) : a_(a) {}
  Quadratic(const Rational& a, const Rational& b, long D);

  /// sqrt(D) itself. D must be squarefree and not 0 or 1.
  static Quadratic sqrt_of(long D);
  /// Parses "a", "a+b*sqrt(D)", "a-sqrt(D)", "b*sqrt(D)" with rational a, b.
  static Quadratic parse(const std::string& text);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  long radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  Quadratic conjugate() const;
  Rational norm() const;
  Quadratic inverse() const;

  Quadratic& operator+=(const Quadratic& o);
  Quadratic& operator-=(const Quadratic& o);
  Quadratic& operator*=(const Quadratic& o);
  Quadratic& operator/=(const Quadratic& o) { return *this *= o.inverse(); }

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  friend Quadratic operator-(const Quadratic& x) { return Quadratic(-x.a_, -x.b_, x.d_); }
  friend bool operator==(const Quadratic& x, const Quadratic& y);

 private:
  long join(const Quadratic& o) const;
  void canonical();

  Rational a_;
  Rational b_;
  long d_ = 0;
};

Quadratic div_int(const Quadratic& x, const Integer& k);
inline bool is_zero(const Quadratic& x) { return sgn(x.rational_part()) == 0 && x.is_rational(); }
std::string to_string(const Quadratic& x);

/// Univariate polynomials over Q in an indeterminate written "a".
class Poly {
 public:
  Poly() = default;
  Poly(long v) : Poly(Rational(v)) {}
  Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly variable();

  /// Coefficients of a^0, a^1, ... with no trailing zeros.
  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(Poly x, const Poly& y) { return x *= y; }
  friend Poly operator-(const Poly& x);
  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }

  Rational evaluate(const Rational& at) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly div_int(const Poly& x, const Integer& k);
inline bool is_zero(const Poly& x) { return x.coeffs().empty(); }
std::string to_string(const Poly& x);

/// Parses "p/q", "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace tbound
