#include <doctest.h>

#include "oracles/oracles.hpp"
#include "tbound/qexp.hpp"

using namespace tbound;

namespace {

QExpansion<Rational> series(std::vector<long> c, unsigned weight = 2,
                            DirichletCharacter eps = DirichletCharacter::trivial(1)) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  const std::size_t t = v.size() - 1;
  return QExpansion<Rational>(std::move(v), t, weight, eps);
}

}  // namespace

TEST_CASE("operator examples") {
  auto f = series({0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  auto b = op_B(2, f);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(b.coeff(n) == Rational(n == 2 || n == 6 ? 1 : 0));
  CHECK(b.reliable() == 12);

  auto g = series({0, 1, 5, 0, 7});
  auto u = op_U(2, g);
  CHECK(u.truncation() == 2);
  CHECK(u.coeff(1) == 5);
  CHECK(u.coeff(2) == 7);

  std::vector<long> c(40);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = static_cast<long>(n * n + 1);
  auto h = series(c);
  auto t3 = op_t(3, h);
  CHECK(t3.coeff(3) == h.coeff(9) + 3 * h.coeff(1));
  CHECK(t3.coeff(2) == h.coeff(6));
  CHECK(t3.reliable() == 39 / 3);
}

TEST_CASE("reliable order bookkeeping") {
  auto f = random_series(60, 2, DirichletCharacter::trivial(1), 5);
  CHECK(op_B(3, f).reliable() == 60);
  QExpansion<Rational> g(f.coeffs(), 10, 2, DirichletCharacter::trivial(1));
  CHECK(op_B(3, g).reliable() == 30);
  CHECK(op_U(7, f).reliable() == 8);
  CHECK(op_t(5, g).reliable() == 2);
  CHECK((f + g).reliable() == 10);
}

TEST_CASE("characters") {
  auto chi = DirichletCharacter::quadratic(-4, 4);
  CHECK(chi.value(1) == 1);
  CHECK(chi.value(3) == -1);
  CHECK(chi.value(2) == 0);
  CHECK(chi.parity() == -1);
  auto chi3 = DirichletCharacter::quadratic(-3, 3);
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = -20; b <= 20; ++b) {
      CHECK(chi3.value(a * b) == chi3.value(a) * chi3.value(b));
      CHECK(chi3.value(a) == chi3.value(a + 3));
    }
  auto triv = DirichletCharacter::trivial(6);
  CHECK(triv.value(5) == 1);
  CHECK(triv.value(4) == 0);
  CHECK(nebentypus_factor(triv, 5, 2) == 5);
  CHECK(nebentypus_factor(triv, 3, 2) == 0);
  CHECK(nebentypus_factor(chi, 3, 3) == -9);
}

TEST_CASE("operators are linear") {
  auto eps = DirichletCharacter::trivial(1);
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto f = random_series(120, 2, eps, 100 + s), g = random_series(120, 2, eps, 200 + s);
    Rational a(3, 2), b(-5);
    auto comb = a * f + b * g;
    CHECK(op_B(3, comb).agrees_with(a * op_B(3, f) + b * op_B(3, g)));
    CHECK(op_U(2, comb).agrees_with(a * op_U(2, f) + b * op_U(2, g)));
    CHECK(op_t(5, comb).agrees_with(a * op_t(5, f) + b * op_t(5, g)));
    CHECK(op_T(12, comb).agrees_with(a * op_T(12, f) + b * op_T(12, g)));
  }
}

TEST_CASE("composite Hecke operators") {
  auto eps = DirichletCharacter::trivial(1);
  auto f = random_series(200, 2, eps, 9);
  CHECK(op_T(1, f).agrees_with(f));
  CHECK(op_T(6, f).coeff(1) == f.coeff(6));
  auto t9 = op_T(9, f);
  auto manual = op_t(3, op_t(3, f)) - Rational(3) * f;
  CHECK(t9.agrees_with(manual));
  CHECK(t9.coeff(1) == f.coeff(9));
}

TEST_CASE("relation report") {
  auto rep = verify_relations(200, 50, 2024);
  CHECK(rep.pass());
  CHECK(rep.trials == 50);
  bool saw_witness = false, saw_u2b4 = false, saw_t5t7 = false;
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.holds);
    CHECK(c.min_compared_order > 0);
    if (!c.expect_equal) {
      saw_witness = true;
      CHECK_FALSE(c.witness.empty());
    }
    if (c.name.find("U_2 o B_4") != std::string::npos) saw_u2b4 = true;
    if (c.name.find("t_5 o t_7") != std::string::npos) saw_t5t7 = true;
  }
  CHECK(saw_witness);
  CHECK(saw_u2b4);
  CHECK(saw_t5t7);
  CHECK_THROWS(verify_relations(7, 1, 1));
}

TEST_CASE("t_3 B_3 and B_3 t_3 differ on q") {
  auto f = series(std::vector<long>(61, 0));
  f.set(1, 1);
  auto lhs = op_t(3, op_B(3, f));
  auto rhs = op_B(3, op_t(3, f));
  CHECK_FALSE(lhs.agrees_with(rhs));
}

TEST_CASE("first coefficient identity") {
  auto rep = verify_first_coefficient(30, 200, 10, 77);
  CHECK(rep.pass());
  CHECK(rep.nmax == 30);
}

TEST_CASE("level 11 eta product is a t_p eigen-series") {
  auto c = oracle::eta_11(300);
  std::vector<Rational> v(c.begin(), c.end());
  QExpansion<Rational> f(v, 300, 2, DirichletCharacter::trivial(11));
  CHECK(f.coeff(2) == -2);
  CHECK(f.coeff(3) == -1);
  CHECK(f.coeff(5) == 1);
  for (std::uint64_t p : {2, 3, 5, 7, 13}) CHECK(op_t(p, f).agrees_with(f.coeff(p) * f));
  // U_11 f = a_11 f with a_11 = 1
  CHECK(f.coeff(11) == 1);
  CHECK(op_t(11, f).agrees_with(f));
}

TEST_CASE("formal eigenforms") {
  auto eps = DirichletCharacter::trivial(1);
  auto f = formal_eigenform<Rational>(120, 2, eps, [](std::uint64_t p) { return Rational(static_cast<long>(p % 7) - 3); });
  for (std::uint64_t p : {2, 3, 5, 7, 11}) CHECK(op_t(p, f).agrees_with(f.coeff(p) * f));
  for (std::uint64_t n = 1; n <= 30; ++n) CHECK(op_T(n, f).agrees_with(f.coeff(n) * f));
}
