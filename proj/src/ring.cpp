#include "tbound/ring.hpp"

#include <regex>
#include <stdexcept>

namespace tbound {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, form)) throw std::invalid_argument("not a rational number: " + text);
  Integer num(m[1].str());
  Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool squarefree(long D) {
  if (D == 0 || D == 1) return false;
  long n = D < 0 ? -D : D;
  for (long k = 2; k * k <= n; ++k)
    if (n % (k * k) == 0) return false;
  return true;
}

}  // namespace

Quadratic::Quadratic(const Rational& a, const Rational& b, long D) : a_(a), b_(b), d_(D) {
  if (D != 0 && !squarefree(D)) throw std::invalid_argument("radicand must be squarefree: " + std::to_string(D));
  if (D == 0 && sgn(b) != 0) throw std::invalid_argument("radical part without a radicand");
  canonical();
}

Quadratic Quadratic::sqrt_of(long D) { return Quadratic(0, 1, D); }

Quadratic Quadratic::parse(const std::string& text) {
  static const std::regex pure(R"(\s*([+-]?\d+(?:/\d+)?)\s*)");
  static const std::regex mixed(
      R"(\s*(?:([+-]?\d+(?:/\d+)?)\s*)?([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*([+-]?\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, pure)) return Quadratic(parse_rational(m[1].str()));
  if (std::regex_match(text, m, mixed)) {
    Rational a = m[1].matched ? parse_rational(m[1].str()) : Rational(0);
    Rational b = m[3].matched ? parse_rational(m[3].str()) : Rational(1);
    if (m[2].matched && m[2].str() == "-") b = -b;
    if (m[1].matched && !m[2].matched) throw std::invalid_argument("cannot parse quadratic number: " + text);
    return Quadratic(a, b, std::stol(m[4].str()));
  }
  throw std::invalid_argument("cannot parse quadratic number: " + text);
}

void Quadratic::canonical() {
  a_.canonicalize();
  b_.canonicalize();
}

long Quadratic::join(const Quadratic& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw std::domain_error("mixing Q(sqrt(" + std::to_string(d_) + ")) and Q(sqrt(" + std::to_string(o.d_) + "))");
}

Quadratic Quadratic::conjugate() const { return Quadratic(a_, -b_, d_); }

Rational Quadratic::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

Quadratic Quadratic::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in quadratic field");
  return Quadratic(a_ / n, -b_ / n, d_);
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
  d_ = join(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
  d_ = join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
  long d = join(o);
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  return *this;
}

bool operator==(const Quadratic& x, const Quadratic& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return sgn(x.b_) == 0 || x.d_ == y.d_;
}

Quadratic div_int(const Quadratic& x, const Integer& k) {
  Rational inv = Rational(1) / Rational(k);
  return Quadratic(x.rational_part() * inv, x.radical_part() * inv, x.radicand());
}

std::string to_string(const Quadratic& x) {
  if (x.is_rational()) return x.rational_part().get_str();
  std::string rad = "sqrt(" + std::to_string(x.radicand()) + ")";
  std::string out;
  if (sgn(x.rational_part()) != 0) out = x.rational_part().get_str();
  Rational b = x.radical_part();
  bool negative = sgn(b) < 0;
  if (negative) b = -b;
  std::string term = b == 1 ? rad : b.get_str() + "*" + rad;
  if (out.empty()) return (negative ? "-" : "") + term;
  return out + (negative ? " - " : " + ") + term;
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

Poly operator-(const Poly& x) {
  Poly out = x;
  for (auto& c : out.c_) c = -c;
  return out;
}

Rational Poly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly div_int(const Poly& x, const Integer& k) {
  std::vector<Rational> c = x.coeffs();
  for (auto& v : c) v /= Rational(k);
  return Poly(std::move(c));
}

std::string to_string(const Poly& x) {
  const auto& c = x.coeffs();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    Rational v = c[i];
    bool negative = sgn(v) < 0;
    if (negative) v = -v;
    std::string mono = i == 0 ? "" : (i == 1 ? "a" : "a^" + std::to_string(i));
    std::string term = mono.empty() ? v.get_str() : (v == 1 ? mono : v.get_str() + "*" + mono);
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace tbound
