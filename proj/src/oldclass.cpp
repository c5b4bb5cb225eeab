#include "tbound/oldclass.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tbound {

OldclassCase parse_oldclass_case(const std::string& text) {
  if (text == "p|M" || text == "p-divides-M" || text == "divides") return OldclassCase::p_divides_M;
  if (text == "p!|M" || text == "p-not-divides-M" || text == "coprime") return OldclassCase::p_not_divides_M;
  throw std::invalid_argument("unknown oldclass case: " + text + " (expected p-divides-M or p-not-divides-M)");
}

std::string to_string(OldclassCase c) {
  return c == OldclassCase::p_divides_M ? "p-divides-M" : "p-not-divides-M";
}

std::string to_string(NormalForm f) {
  switch (f) {
    case NormalForm::M1: return "M1";
    case NormalForm::M2: return "M2";
    case NormalForm::M3: return "M3";
    case NormalForm::M4: return "M4";
  }
  return "unknown";
}

namespace {

std::optional<Integer> exact_root(const Integer& x) {
  if (sgn(x) < 0 || !mpz_perfect_square_p(x.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto n = exact_root(q.get_num());
  auto d = exact_root(q.get_den());
  if (!n || !d) return std::nullopt;
  Rational r(*n, *d);
  r.canonicalize();
  return r;
}

/// q = s^2 D with D squarefree (D = 1 for squares).
std::pair<Rational, long> squarefree_split(const Rational& q) {
  Integer nd = q.get_num() * q.get_den();
  if (!nd.fits_slong_p())
    throw std::domain_error("discriminant too large to split");
  long sign = sgn(nd) < 0 ? -1 : 1;
  unsigned long mag = sign < 0 ? Integer(-nd).get_ui() : nd.get_ui();
  long D = sign;
  Integer s = 1;
  for (auto [prime, e] : factorize(mag)) {
    if (e % 2 == 1) D *= static_cast<long>(prime);
    s *= ipow(Integer(static_cast<unsigned long>(prime)), e / 2);
  }
  // q = nd / den^2 = s^2 D / den^2
  Rational root(s, q.get_den());
  root.canonicalize();
  return {root, D};
}

Quadratic quadratic_sqrt(const Quadratic& x) {
  if (is_zero(x)) return Quadratic(0);
  if (x.is_rational()) {
    auto [s, D] = squarefree_split(x.rational_part());
    if (D == 1) return Quadratic(s);
    return Quadratic(0, s, D);
  }
  // (u + v sqrt(D))^2 = a + b sqrt(D): u^2 + D v^2 = a, 2uv = b
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_part();
  long D = x.radicand();
  if (auto r = rational_sqrt(x.norm())) {
    for (int sign : {1, -1}) {
      Rational u2 = (a + sign * *r) / 2;
      if (auto u = rational_sqrt(u2); u && sgn(*u) != 0) return Quadratic(*u, b / (2 * *u), D);
    }
  }
  throw std::domain_error("square root outside Q(sqrt(" + std::to_string(D) + ")): " + to_string(x));
}

/// Roots of c2 X^2 + c1 X + c0 (c2 != 0).
std::vector<Quadratic> quadratic_roots(const Quadratic& c2, const Quadratic& c1, const Quadratic& c0) {
  Quadratic disc = c1 * c1 - Quadratic(4) * c2 * c0;
  Quadratic two_a = Quadratic(2) * c2;
  if (is_zero(disc)) return {(-c1) / two_a};
  Quadratic s = quadratic_sqrt(disc);
  return {(-c1 + s) / two_a, (-c1 - s) / two_a};
}

std::vector<Quadratic> distinct_roots(const std::vector<Quadratic>& cp) {
  std::size_t z = 0;
  while (z < cp.size() && is_zero(cp[z])) ++z;
  std::vector<Quadratic> roots;
  if (z > 0) roots.push_back(Quadratic(0));
  std::vector<Quadratic> rest(cp.begin() + static_cast<std::ptrdiff_t>(z), cp.end());
  const std::size_t deg = rest.size() - 1;
  if (deg == 1) {
    roots.push_back(-rest[0] / rest[1]);
  } else if (deg == 2) {
    for (auto& r : quadratic_roots(rest[2], rest[1], rest[0])) roots.push_back(r);
  } else if (deg > 2) {
    throw std::domain_error("nonzero part of the characteristic polynomial has degree > 2");
  }
  return roots;
}

std::string sort_key(const Quadratic& x) { return to_string(x); }

void sort_census(std::vector<JordanBlock>& census) {
  std::sort(census.begin(), census.end(), [](const JordanBlock& x, const JordanBlock& y) {
    auto kx = sort_key(x.eigenvalue), ky = sort_key(y.eigenvalue);
    if (kx != ky) return kx < ky;
    return x.size > y.size;
  });
}

}  // namespace

std::vector<JordanBlock> jordan_structure(const Matrix<Quadratic>& m) {
  const std::size_t n = m.size();
  std::vector<JordanBlock> census;
  if (n == 0) return census;
  for (const auto& alpha : distinct_roots(charpoly(m))) {
    Matrix<Quadratic> shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted[i][i] = shifted[i][i] - alpha;
    // ranks r_0 = n, r_j = rank (M - alpha)^j until stable
    std::vector<std::size_t> ranks{n};
    Matrix<Quadratic> power = identity_matrix<Quadratic>(n);
    while (true) {
      power = multiply(power, shifted);
      std::size_t r = matrix_rank(power);
      if (r == ranks.back()) break;
      ranks.push_back(r);
    }
    // at least j: ranks[j-1] - ranks[j]
    const std::size_t top = ranks.size() - 1;
    for (std::size_t j = 1; j <= top; ++j) {
      std::size_t at_least = ranks[j - 1] - ranks[j];
      std::size_t above = j < top ? ranks[j] - ranks[j + 1] : 0;
      for (std::size_t b = 0; b < at_least - above; ++b) census.push_back({alpha, j});
    }
  }
  sort_census(census);
  return census;
}

NormalForm oldclass_normal_form(OldclassCase kase, const Quadratic& a_p, const Quadratic& c) {
  if (kase == OldclassCase::p_divides_M) return NormalForm::M1;
  return a_p * a_p == Quadratic(4) * c ? NormalForm::M4 : NormalForm::M3;
}

Matrix<Quadratic> normal_form_matrix(const Quadratic& a_p, const Quadratic& c, unsigned k) {
  if (k < 1) throw std::invalid_argument("normal form needs k >= 1");
  Matrix<Quadratic> m(k + 1, std::vector<Quadratic>(k + 1, Quadratic(0)));
  if (a_p * a_p == Quadratic(4) * c) {
    Quadratic half = div_int(a_p, 2);
    m[0][0] = half;
    m[0][1] = Quadratic(1);
    m[1][1] = half;
  } else {
    auto roots = quadratic_roots(Quadratic(1), -a_p, c);
    m[0][0] = roots[0];
    m[1][1] = roots[1];
  }
  for (unsigned j = 3; j <= k; ++j) m[j - 1][j] = Quadratic(1);
  return m;
}

std::vector<JordanBlock> predicted_census(OldclassCase kase, const Quadratic& a_p, const Quadratic& c, unsigned k) {
  std::vector<JordanBlock> out;
  if (kase == OldclassCase::p_divides_M) {
    if (is_zero(a_p)) {
      out.push_back({Quadratic(0), k + 1});
    } else {
      out.push_back({a_p, 1});
      out.push_back({Quadratic(0), k});
    }
  } else {
    if (a_p * a_p == Quadratic(4) * c) {
      out.push_back({div_int(a_p, 2), 2});
    } else {
      for (auto& r : quadratic_roots(Quadratic(1), -a_p, c)) out.push_back({r, 1});
    }
    if (k >= 2) out.push_back({Quadratic(0), k - 1});
  }
  sort_census(out);
  return out;
}

OldclassBlocks oldclass_blocks(std::uint64_t q, std::uint64_t n, OldclassCase kase, const Quadratic& a_q,
                               const Quadratic& c) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  if (n == 0 || n % q != 0) throw std::invalid_argument("q must divide the co-level n");
  OldclassBlocks out;
  out.q = q;
  out.n = n;
  std::uint64_t rest = n;
  while (rest % q == 0) {
    rest /= q;
    ++out.m;
  }
  std::map<std::uint64_t, std::size_t> where;
  for (auto d : divisors(rest)) {
    std::uint64_t e = d;
    for (unsigned j = 0; j <= out.m; ++j, e *= q) {
      where[e] = out.basis.size();
      out.basis.push_back(e);
    }
  }
  const std::size_t dim = out.basis.size();
  out.block_size = out.m + 1;
  out.block_count = dim / out.block_size;
  out.matrix.assign(dim, std::vector<Quadratic>(dim, Quadratic(0)));
  for (std::size_t col = 0; col < dim; ++col) {
    std::uint64_t e = out.basis[col];
    if (e % q == 0) {
      out.matrix[where.at(e / q)][col] = Quadratic(1);
    } else {
      out.matrix[where.at(e)][col] = a_q;
      if (kase == OldclassCase::p_not_divides_M) out.matrix[where.at(e * q)][col] = -c;
    }
  }

  out.block_diagonal = true;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (i / out.block_size != j / out.block_size && !is_zero(out.matrix[i][j])) out.block_diagonal = false;

  auto single = build_Up_matrix(kase, a_q, c, out.m);
  out.blocks_match_single_prime = true;
  for (std::size_t b = 0; b < out.block_count; ++b)
    for (std::size_t i = 0; i < out.block_size; ++i)
      for (std::size_t j = 0; j < out.block_size; ++j)
        if (!(out.matrix[b * out.block_size + i][b * out.block_size + j] == single[i][j]))
          out.blocks_match_single_prime = false;
  return out;
}

JordanBasisReport jordan_basis_trivial_char(int a_p, unsigned k) {
  if (a_p != 1 && a_p != -1) throw std::invalid_argument("a_p must be +1 or -1 for the trivial character");
  JordanBasisReport rep;
  rep.a_p = a_p;
  rep.k = k;
  const std::size_t n = k + 1;
  rep.basis.push_back("f");
  rep.change_of_basis = identity_matrix<Rational>(n);
  int sign = 1;
  for (unsigned j = 1; j <= k; ++j) {
    sign *= a_p;
    rep.change_of_basis[0][j] = -sign;
    std::string shift = j == 1 ? "B_p f" : "B_{p^" + std::to_string(j) + "} f";
    rep.basis.push_back(shift + (sign == 1 ? " - f" : " + f"));
  }
  Matrix<Rational> u = k == 0 ? Matrix<Rational>{{Rational(a_p)}}
                              : build_Up_matrix(OldclassCase::p_divides_M, Rational(a_p), Rational(0), k);
  auto inv = matrix_inverse(rep.change_of_basis);
  rep.conjugated = multiply(multiply(*inv, u), rep.change_of_basis);
  Matrix<Rational> expected(n, std::vector<Rational>(n, Rational(0)));
  expected[0][0] = a_p;
  for (unsigned j = 2; j <= k; ++j) expected[j - 1][j] = 1;
  rep.is_jordan = rep.conjugated == expected;
  return rep;
}

}  // namespace tbound
