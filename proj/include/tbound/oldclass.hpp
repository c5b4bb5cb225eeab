#pragma once

#include "tbound/qexp.hpp"
#include "tbound/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tbound {

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
Matrix<R> identity_matrix(std::size_t n) {
  Matrix<R> m(n, std::vector<R>(n, R(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = R(1);
  return m;
}

template <class R>
Matrix<R> multiply(const Matrix<R>& a, const Matrix<R>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<R> out(n, std::vector<R>(m, R(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][l] * b[l][j];
    }
  return out;
}

/// det(X I - A) by Faddeev-LeVerrier; coefficients of X^0, ..., X^n. Needs only exact
/// division by the integers 1..n, so it runs over Q[a] as well as over fields.
template <class R>
std::vector<R> charpoly(const Matrix<R>& a) {
  const std::size_t n = a.size();
  std::vector<R> c(n + 1, R(0));
  c[n] = R(1);
  Matrix<R> m(n, std::vector<R>(n, R(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<R> am = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] = am[i][i] + c[n - k + 1];
    m = std::move(am);
    Matrix<R> prod = multiply(a, m);
    R trace(0);
    for (std::size_t i = 0; i < n; ++i) trace = trace + prod[i][i];
    c[n - k] = -div_int(trace, Integer(static_cast<unsigned long>(k)));
  }
  return c;
}

/// Multiplies two polynomials in X given by coefficient lists.
template <class R>
std::vector<R> poly_multiply(const std::vector<R>& x, const std::vector<R>& y) {
  if (x.empty() || y.empty()) return {};
  std::vector<R> out(x.size() + y.size() - 1, R(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = out[i + j] + x[i] * y[j];
  return out;
}

/// Rank over a field (Rational or Quadratic).
template <class F>
std::size_t matrix_rank(Matrix<F> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && is_zero(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    F inv = F(1) / m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (is_zero(m[i][c])) continue;
      F factor = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Inverse over a field, or nothing when singular.
template <class F>
std::optional<Matrix<F>> matrix_inverse(Matrix<F> m) {
  const std::size_t n = m.size();
  Matrix<F> inv = identity_matrix<F>(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m[piv][c])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    F s = F(1) / m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = m[c][j] * s;
      inv[c][j] = inv[c][j] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(m[i][c])) continue;
      F f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = m[i][j] - f * m[c][j];
        inv[i][j] = inv[i][j] - f * inv[c][j];
      }
    }
  }
  return inv;
}

template <class R>
std::vector<std::vector<std::string>> to_strings(const Matrix<R>& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

// --- oldclass matrices ---

enum class OldclassCase { p_divides_M, p_not_divides_M };
OldclassCase parse_oldclass_case(const std::string& text);
std::string to_string(OldclassCase c);

/// U_p on the basis {f, B_p f, ..., B_{p^k} f}; column j holds U_p(B_{p^j} f).
///   p | M:  U_p f = a_p f, U_p B_{p^j} f = B_{p^(j-1)} f          (shape M1)
///   p ∤ M:  U_p f = a_p f - c B_p f with c = eps(p) p^(lambda-1)  (shape M2)
/// so the 1s sit on the superdiagonal and -c at (1, 0). Throws for k < 1, or c = 0 with p ∤ M.
template <class R>
Matrix<R> build_Up_matrix(OldclassCase kase, const R& a_p, const R& c, unsigned k) {
  if (k < 1) throw std::invalid_argument("oldclass matrix needs k >= 1");
  if (kase == OldclassCase::p_not_divides_M && is_zero(c))
    throw std::invalid_argument("eps(p) p^(lambda-1) must be nonzero when p does not divide M");
  Matrix<R> m(k + 1, std::vector<R>(k + 1, R(0)));
  m[0][0] = a_p;
  for (unsigned j = 1; j <= k; ++j) m[j - 1][j] = R(1);
  if (kase == OldclassCase::p_not_divides_M) m[1][0] = -c;
  return m;
}

/// (X^2 - a X + c) X^(k-1) for p ∤ M, (X - a) X^k for p | M.
template <class R>
std::vector<R> expected_Up_charpoly(OldclassCase kase, const R& a_p, const R& c, unsigned k) {
  std::vector<R> head = kase == OldclassCase::p_not_divides_M ? std::vector<R>{c, -a_p, R(1)}
                                                              : std::vector<R>{-a_p, R(1)};
  std::vector<R> tail(kase == OldclassCase::p_not_divides_M ? k : k + 1, R(0));
  tail.back() = R(1);
  return poly_multiply(head, tail);
}

struct JordanBlock {
  Quadratic eigenvalue;
  std::size_t size = 0;
  friend bool operator==(const JordanBlock& x, const JordanBlock& y) {
    return x.eigenvalue == y.eigenvalue && x.size == y.size;
  }
};

/// Block census sorted by eigenvalue string then decreasing size. Eigenvalues must lie in
/// the field of the entries or in Q(sqrt(discriminant)); otherwise std::domain_error.
std::vector<JordanBlock> jordan_structure(const Matrix<Quadratic>& m);

enum class NormalForm { M1, M2, M3, M4 };
std::string to_string(NormalForm f);

/// Tag of the shape U_p takes on the oldclass: M1 for p | M; for p ∤ M, M3 when
/// a_p^2 != 4c and M4 otherwise (build_Up_matrix itself is M2).
NormalForm oldclass_normal_form(OldclassCase kase, const Quadratic& a_p, const Quadratic& c);

/// The matrices M3 = diag(alpha, alpha') + J_{k-1}(0) and M4 = [[a/2, 1], [0, a/2]] + J_{k-1}(0).
Matrix<Quadratic> normal_form_matrix(const Quadratic& a_p, const Quadratic& c, unsigned k);

/// Census the case analysis predicts, independent of the rank computation.
std::vector<JordanBlock> predicted_census(OldclassCase kase, const Quadratic& a_p, const Quadratic& c, unsigned k);

// --- kernel vectors ---

struct KernelCheckReport {
  bool precondition_ok = false;      // t_p f = a_p f to the reliable order
  std::string eigenvalue;
  std::string message;
  bool kernel_ok = false;            // U_p(B_{p^2} f - (a_p/c) B_p f + (1/c) f) = 0
  std::size_t compared_order = 0;
  bool m4_applicable = false;        // a_p^2 = 4c
  bool m4_ok = false;                // U_p(a_p f - 2c B_p f) = (a_p/2)(a_p f - 2c B_p f)
  bool pass() const { return precondition_ok && kernel_ok && (!m4_applicable || m4_ok); }
};

/// Checks the eigen-series precondition, then the kernel vector of U_p and, when
/// a_p^2 = 4 eps(p) p^(lambda-1), the eigenvector of the double root. Requires eps(p) != 0.
template <class R>
KernelCheckReport kernel_vector_check(const QExpansion<R>& f, std::uint64_t p, std::size_t order) {
  KernelCheckReport rep;
  if (is_zero(f.coeff(1))) {
    rep.message = "a_1 = 0: not a normalised eigen-series";
    return rep;
  }
  const Integer c = nebentypus_factor(f.character(), p, f.weight());
  if (sgn(c) == 0) {
    rep.message = "eps(p) = 0: p divides the character modulus";
    return rep;
  }
  if (!(f.coeff(1) == R(1))) {
    rep.message = "series must be normalised with a_1 = 1";
    return rep;
  }
  const R ap = f.coeff(p);
  rep.eigenvalue = to_string(ap);
  QExpansion<R> tf = op_t(p, f);
  QExpansion<R> af = ap * f;
  if (!tf.agrees_with(af)) {
    rep.message = "t_p f != a_p f: not an eigen-series for t_p";
    return rep;
  }
  rep.precondition_ok = true;

  const R cR = R(Rational(c));
  QExpansion<R> bp = op_B(p, f), bp2 = op_B(p * p, f);
  // c v = c B_{p^2} f - a_p B_p f + f
  QExpansion<R> cv = cR * bp2 - ap * bp + f;
  QExpansion<R> image = op_U(p, cv);
  rep.compared_order = image.reliable();
  rep.kernel_ok = image.vanishes() && rep.compared_order >= order;
  if (!rep.kernel_ok && rep.compared_order < order)
    rep.message = "reliable order " + std::to_string(rep.compared_order) + " below the requested " +
                  std::to_string(order);

  rep.m4_applicable = ap * ap == R(4) * cR;
  if (rep.m4_applicable) {
    QExpansion<R> w = ap * f - (R(2) * cR) * bp;
    QExpansion<R> uw = op_U(p, w);
    // 2 U_p w = a_p w
    QExpansion<R> lhs = R(2) * uw;
    QExpansion<R> rhs = ap * w;
    rep.m4_ok = lhs.agrees_with(rhs) && std::min(lhs.reliable(), rhs.reliable()) >= order;
  }
  return rep;
}

// --- several primes in the co-level ---

struct OldclassBlocks {
  std::uint64_t q = 0;
  std::uint64_t n = 0;
  unsigned m = 0;                       // q^m || n
  std::vector<std::uint64_t> basis;     // e with basis element B_e f, grouped by d | n/q^m
  Matrix<Quadratic> matrix;             // U_q in that basis
  std::size_t block_count = 0;          // sigma_0(n/q^m)
  std::size_t block_size = 0;           // m + 1
  bool block_diagonal = false;
  bool blocks_match_single_prime = false;  // every block equals build_Up_matrix(case, a_q, c, m)
  bool pass() const { return block_diagonal && blocks_match_single_prime; }
};

/// U_q on {B_e f : e | n} computed from U_q B_{q^j} = B_{q^(j-1)}, U_q B_d = B_d U_q for
/// gcd(d, q) = 1 and the action of U_q on f for the given case. Requires q | n.
OldclassBlocks oldclass_blocks(std::uint64_t q, std::uint64_t n, OldclassCase kase, const Quadratic& a_q,
                               const Quadratic& c);

struct JordanBasisReport {
  int a_p = 1;
  unsigned k = 0;
  std::vector<std::string> basis;  // e.g. "B_{p^2}f - f"
  Matrix<Rational> change_of_basis;  // columns: basis vectors in {B_{p^j} f}
  Matrix<Rational> conjugated;       // P^-1 M1 P
  bool is_jordan = false;            // equals diag(a_p) + J_k(0)
};

/// Basis {f, B_p f - a_p f, B_{p^2} f - f, ...} (element j = B_{p^j} f - a_p^j f) for the
/// trivial-character case p || M. k = 0 gives {f} with U_p = (a_p). Throws
/// std::invalid_argument unless a_p = +1 or -1.
JordanBasisReport jordan_basis_trivial_char(int a_p, unsigned k);

}  // namespace tbound
