#include <doctest.h>

#include "oracles/oracles.hpp"
#include "tbound/oldclass.hpp"

using namespace tbound;

namespace {

QExpansion<Rational> eta(std::size_t order) {
  auto c = oracle::eta_11(order);
  std::vector<Rational> v(c.begin(), c.end());
  return QExpansion<Rational>(std::move(v), order, 2, DirichletCharacter::trivial(11));
}

Quadratic Q(const char* s) { return Quadratic::parse(s); }

}  // namespace

TEST_CASE("quadratic ring") {
  auto x = Q("3-2*sqrt(5)");
  CHECK(x.rational_part() == 3);
  CHECK(x.radical_part() == -2);
  CHECK(x.radicand() == 5);
  CHECK(x * x.conjugate() == Quadratic(-11));
  CHECK(x.norm() == -11);
  CHECK(x * x.inverse() == Quadratic(1));
  CHECK(to_string(Q("-sqrt(2)")) == "-sqrt(2)");
  CHECK(Q("1/2+sqrt(-3)").radicand() == -3);
  CHECK(Quadratic::sqrt_of(2) * Quadratic::sqrt_of(2) == Quadratic(2));
  CHECK_THROWS(Quadratic::sqrt_of(2) + Quadratic::sqrt_of(3));
  CHECK_THROWS(Quadratic::parse("1 sqrt(2)"));
}

TEST_CASE("polynomials in a") {
  Poly a = Poly::variable();
  Poly p = a * a - Poly(3) * a + Poly(1);
  CHECK(to_string(p) == "a^2 - 3*a + 1");
  CHECK(p.evaluate(2) == -1);
  CHECK(is_zero(p - p));
}

TEST_CASE("U_p matrix shapes") {
  auto m = build_Up_matrix(OldclassCase::p_not_divides_M, Rational(5), Rational(7), 1);
  CHECK(m == Matrix<Rational>{{5, 1}, {-7, 0}});
  auto m1 = build_Up_matrix(OldclassCase::p_divides_M, Rational(2), Rational(0), 2);
  CHECK(m1 == Matrix<Rational>{{2, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK_THROWS(build_Up_matrix(OldclassCase::p_divides_M, Rational(2), Rational(0), 0));
  CHECK_THROWS(build_Up_matrix(OldclassCase::p_not_divides_M, Rational(2), Rational(0), 2));
  CHECK(parse_oldclass_case("p|M") == OldclassCase::p_divides_M);
  CHECK(parse_oldclass_case("coprime") == OldclassCase::p_not_divides_M);
  CHECK_THROWS_AS(parse_oldclass_case("M3"), std::invalid_argument);
}

TEST_CASE("characteristic polynomial with a_p symbolic") {
  Poly a = Poly::variable();
  for (unsigned k = 1; k <= 4; ++k)
    for (long c : {1L, 2L, 3L, -5L}) {
      auto m = build_Up_matrix(OldclassCase::p_not_divides_M, a, Poly(c), k);
      auto cp = charpoly(m);
      // (X^2 - a X + c) X^(k-1)
      std::vector<Poly> expected(k + 2, Poly(0));
      expected[k - 1] = Poly(c);
      expected[k] = -a;
      expected[k + 1] = Poly(1);
      CHECK(cp == expected);
      CHECK(cp == expected_Up_charpoly(OldclassCase::p_not_divides_M, a, Poly(c), k));
    }
  for (unsigned k = 1; k <= 4; ++k) {
    auto cp = charpoly(build_Up_matrix(OldclassCase::p_divides_M, a, Poly(0), k));
    std::vector<Poly> expected(k + 2, Poly(0));
    expected[k] = -a;
    expected[k + 1] = Poly(1);
    CHECK(cp == expected);
  }
}

TEST_CASE("charpoly against the determinant at sample points") {
  // det(x I - M) by cofactor expansion for the 3 x 3 case
  auto m = build_Up_matrix(OldclassCase::p_not_divides_M, Rational(3), Rational(2), 2);
  auto cp = charpoly(m);
  for (long x = -3; x <= 3; ++x) {
    Matrix<Rational> s = m;
    for (auto& row : s)
      for (auto& e : row) e = -e;
    for (int i = 0; i < 3; ++i) s[i][i] += x;
    Rational det = s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
                   s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
    Rational val = 0, pw = 1;
    for (auto& c : cp) {
      val += c * pw;
      pw *= x;
    }
    CHECK(val == det);
  }
}

TEST_CASE("Jordan censuses for the four cases") {
  using B = std::vector<JordanBlock>;
  // p | M, a_p = 0: one nilpotent block
  auto m1 = build_Up_matrix(OldclassCase::p_divides_M, Quadratic(0), Quadratic(0), 3);
  CHECK(jordan_structure(m1) == B{{Quadratic(0), 4}});
  // p | M, a_p != 0: (a_p, 1) and a nilpotent block of size k
  auto m1b = build_Up_matrix(OldclassCase::p_divides_M, Quadratic(-1), Quadratic(0), 3);
  CHECK(jordan_structure(m1b) == predicted_census(OldclassCase::p_divides_M, Quadratic(-1), Quadratic(0), 3));
  CHECK(jordan_structure(m1b).size() == 2);
  // p does not divide M, distinct roots (rational and in Q(i))
  auto m3 = build_Up_matrix(OldclassCase::p_not_divides_M, Quadratic(5), Quadratic(6), 3);
  CHECK(jordan_structure(m3) == B{{Quadratic(0), 2}, {Quadratic(2), 1}, {Quadratic(3), 1}});
  auto m3c = build_Up_matrix(OldclassCase::p_not_divides_M, Quadratic(-2), Quadratic(2), 2);
  auto census = jordan_structure(m3c);
  CHECK(census == predicted_census(OldclassCase::p_not_divides_M, Quadratic(-2), Quadratic(2), 2));
  CHECK(oldclass_normal_form(OldclassCase::p_not_divides_M, Quadratic(-2), Quadratic(2)) == NormalForm::M3);
  // double root: M4
  auto a = Q("2*sqrt(2)");
  auto m4 = build_Up_matrix(OldclassCase::p_not_divides_M, a, Quadratic(2), 2);
  CHECK(jordan_structure(m4) == B{{Quadratic(0), 1}, {Quadratic::sqrt_of(2), 2}});
  CHECK(oldclass_normal_form(OldclassCase::p_not_divides_M, a, Quadratic(2)) == NormalForm::M4);
  auto m4r = build_Up_matrix(OldclassCase::p_not_divides_M, Quadratic(6), Quadratic(9), 1);
  CHECK(jordan_structure(m4r) == B{{Quadratic(3), 2}});
  // the normal form is similar: same census
  CHECK(jordan_structure(normal_form_matrix(a, Quadratic(2), 4)) ==
        predicted_census(OldclassCase::p_not_divides_M, a, Quadratic(2), 4));
  CHECK(jordan_structure(normal_form_matrix(Quadratic(5), Quadratic(6), 3)) == jordan_structure(m3));
}

TEST_CASE("Weil-type discriminant") {
  // X^2 - a X + q has a rational double root only when a^2 = 4q
  for (long q : {2L, 3L, 5L, 7L})
    for (long a = -2 * q; a <= 2 * q; ++a) {
      bool double_root = a * a == 4 * q;
      CHECK((oldclass_normal_form(OldclassCase::p_not_divides_M, Quadratic(a), Quadratic(q)) == NormalForm::M4) ==
            double_root);
    }
}

TEST_CASE("kernel vector on the level 11 newform") {
  auto f = eta(300);
  for (std::uint64_t p : {2, 3}) {
    auto rep = kernel_vector_check(f, p, 100);
    CAPTURE(p);
    CHECK(rep.precondition_ok);
    CHECK(rep.kernel_ok);
    CHECK(rep.compared_order >= 100);
    CHECK_FALSE(rep.m4_applicable);
    CHECK(rep.pass());
  }
  // explicit: U_2(B_4 f + B_2 f + f/2) = 0
  auto v = op_B(4, f) + op_B(2, f) + Rational(1, 2) * f;
  CHECK(op_U(2, v).vanishes());
}

TEST_CASE("kernel check preconditions") {
  std::vector<Rational> c(101, 0);
  c[1] = 1;
  c[2] = 1;
  QExpansion<Rational> g(c, 100, 2, DirichletCharacter::trivial(1));
  auto rep = kernel_vector_check(g, 3, 30);
  CHECK_FALSE(rep.precondition_ok);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.message.empty());
  // eps(p) = 0
  auto f = eta(100);
  CHECK_FALSE(kernel_vector_check(f, 11, 5).pass());
}

TEST_CASE("formal eigenforms: M4 and symbolic a_p") {
  // a_p^2 = 4 p^(lambda-1): lambda = 3, a_2 = 4
  auto eps = DirichletCharacter::trivial(1);
  auto f = formal_eigenform<Rational>(500, 3, eps, [](std::uint64_t p) { return Rational(static_cast<long>(2 * p)); });
  auto rep = kernel_vector_check(f, 2, 60);
  CHECK(rep.m4_applicable);
  CHECK(rep.m4_ok);
  CHECK(rep.pass());

  auto g = formal_eigenform<Poly>(300, 2, eps, [](std::uint64_t p) {
    return p == 2 ? Poly::variable() : Poly(static_cast<long>(p % 3));
  });
  auto sym = kernel_vector_check(g, 3, 60);
  CHECK(sym.pass());
}

TEST_CASE("oldclass blocks") {
  auto b = oldclass_blocks(2, 12, OldclassCase::p_not_divides_M, Quadratic(-2), Quadratic(2));
  CHECK(b.m == 2);
  CHECK(b.block_count == 2);
  CHECK(b.block_size == 3);
  CHECK(b.pass());
  auto c = oldclass_blocks(5, 30, OldclassCase::p_divides_M, Quadratic(1), Quadratic(0));
  CHECK(c.block_count == 4);
  CHECK(c.block_size == 2);
  CHECK(c.pass());
  auto d = oldclass_blocks(3, 27, OldclassCase::p_not_divides_M, Quadratic(1), Quadratic(3));
  CHECK(d.block_count == 1);
  CHECK(d.pass());
  CHECK_THROWS(oldclass_blocks(5, 12, OldclassCase::p_divides_M, Quadratic(1), Quadratic(0)));
}

TEST_CASE("Jordan basis for the trivial character") {
  auto r = jordan_basis_trivial_char(1, 2);
  CHECK(r.basis == std::vector<std::string>{"f", "B_p f - f", "B_{p^2} f - f"});
  CHECK(r.is_jordan);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.conjugated[i][i] == (i == 0 ? 1 : 0));
  auto s = jordan_basis_trivial_char(-1, 1);
  CHECK(s.basis == std::vector<std::string>{"f", "B_p f + f"});
  CHECK(s.is_jordan);
  auto z = jordan_basis_trivial_char(1, 0);
  CHECK(z.basis == std::vector<std::string>{"f"});
  CHECK(z.conjugated == Matrix<Rational>{{1}});
  CHECK_THROWS_AS(jordan_basis_trivial_char(2, 1), std::invalid_argument);
}
