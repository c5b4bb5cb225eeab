#include <doctest.h>

#include "oracles/oracles.hpp"
#include "tbound/residue_p1.hpp"

#include <set>
#include <stdexcept>

using namespace tbound;

namespace {

std::pair<oracle::i64, oracle::i64> canonical(const P1Table& t, P1Index i) {
  auto [c, d] = t.pair(i);
  auto N = static_cast<oracle::i64>(t.modulus());
  return oracle::p1_canonical(static_cast<oracle::i64>(c), static_cast<oracle::i64>(d), N);
}

}  // namespace

TEST_CASE("prime powers") {
  PrimePower pp(3, 2);
  CHECK(pp.modulus() == 9);
  CHECK(pp.to_string() == "3^2");
  CHECK(PrimePower::parse("7^3").modulus() == 343);
  CHECK(PrimePower::parse("101").n() == 1);
  CHECK_THROWS_AS(PrimePower(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimePower(5, 0), std::invalid_argument);
  CHECK_THROWS(PrimePower::parse("abc"));
}

TEST_CASE("table sizes") {
  CHECK(P1Table(PrimePower(11, 1)).size() == 12);
  CHECK(P1Table(PrimePower(3, 2)).size() == 12);
  CHECK(P1Table(PrimePower(2, 1)).size() == 3);
  for (auto [p, n] : {std::pair{2u, 5u}, {3u, 3u}, {5u, 2u}, {7u, 2u}, {13u, 1u}}) {
    P1Table t(PrimePower(p, n));
    CHECK(static_cast<oracle::i64>(t.size()) == oracle::p1_size_by_counting(static_cast<oracle::i64>(t.modulus())));
  }
}

TEST_CASE("representatives are one per class") {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {11u, 1u}, {2u, 6u}}) {
    P1Table t(PrimePower(p, n));
    std::set<std::pair<oracle::i64, oracle::i64>> seen;
    for (P1Index i = 0; i < t.size(); ++i) seen.insert(canonical(t, i));
    CHECK(seen.size() == t.size());
    CHECK(seen == oracle::p1_points(static_cast<oracle::i64>(t.modulus())));
  }
}

TEST_CASE("ordering: affine by residue, then infinite branch") {
  P1Table t(PrimePower(3, 2));
  for (P1Index i = 0; i < 9; ++i) {
    CHECK(t.point(i).kind == P1Point::Kind::affine);
    CHECK(t.point(i).value == i);
  }
  for (P1Index i = 9; i < 12; ++i) {
    CHECK(t.point(i).kind == P1Point::Kind::infinite_branch);
    CHECK(t.point(i).value == i - 9);
    CHECK(t.pair(i) == std::pair<std::uint64_t, std::uint64_t>{1, 3 * (i - 9)});
  }
}

TEST_CASE("normalize examples") {
  PrimePower p11(11, 1);
  auto a = normalize(2, 3, p11);
  REQUIRE(a);
  CHECK(*a == P1Point{P1Point::Kind::affine, 8});
  CHECK(*normalize(0, 1, p11) == P1Point{P1Point::Kind::affine, 0});
  CHECK_FALSE(normalize(2, 4, PrimePower(2, 5)));
  CHECK(*normalize(1, 0, p11) == P1Point{P1Point::Kind::infinite_branch, 0});
  CHECK(*normalize(-3, -1, p11) == P1Point{P1Point::Kind::affine, 3});
}

TEST_CASE("normalize is idempotent and agrees with the oracle") {
  PrimePower pp(2, 5);
  P1Table t(pp);
  for (std::int64_t c = -40; c <= 40; ++c)
    for (std::int64_t d = -40; d <= 40; ++d) {
      auto x = normalize(c, d, pp);
      if (!x) {
        CHECK(c % 2 == 0);
        CHECK(d % 2 == 0);
        continue;
      }
      P1Index i = t.index_of(*x);
      auto [c2, d2] = t.pair(i);
      auto again = normalize(static_cast<std::int64_t>(c2), static_cast<std::int64_t>(d2), pp);
      REQUIRE(again);
      CHECK(*again == *x);
      CHECK(canonical(t, i) == oracle::p1_canonical(c, d, 32));
    }
}

TEST_CASE("sigma and tau examples") {
  P1Table t(PrimePower(11, 1));
  auto zero = *t.index_of_pair(0, 1);
  auto inf = *t.index_of_pair(1, 0);
  CHECK(t.act_sigma(zero) == inf);
  CHECK(t.describe(inf) == "(1:0)");
  auto three = *t.index_of_pair(3, 1);
  CHECK(t.act_sigma(t.act_tau(three)) == *t.index_of_pair(4, 1));
}

TEST_CASE("permutation identities on every point") {
  for (auto [p, n] : {std::pair{2u, 1u}, {2u, 7u}, {3u, 4u}, {5u, 3u}, {101u, 1u}, {7u, 3u}}) {
    P1Table t(PrimePower(p, n));
    const auto m = t.modulus();
    std::vector<int> hit_s(t.size()), hit_t(t.size());
    for (P1Index x = 0; x < t.size(); ++x) {
      CHECK(t.act_sigma(t.act_sigma(x)) == x);
      CHECK(t.act_tau(t.act_tau(t.act_tau(x))) == x);
      ++hit_s[t.act_sigma(x)];
      ++hit_t[t.act_tau(x)];
      // right action matches the matrix formulas on the representative
      auto [c, d] = t.pair(x);
      auto ci = static_cast<std::int64_t>(c), di = static_cast<std::int64_t>(d);
      CHECK(t.act_sigma(x) == *t.index_of_pair(-di, ci));
      CHECK(t.act_tau(x) == *t.index_of_pair(di, -ci - di));
      if (x < m) {
        CHECK(t.act_sigma(t.act_tau(x)) == (x + 1) % m);
        CHECK(t.act_tau(t.act_tau(t.act_sigma(x))) == (x + m - 1) % m);
      }
    }
    CHECK(std::all_of(hit_s.begin(), hit_s.end(), [](int k) { return k == 1; }));
    CHECK(std::all_of(hit_t.begin(), hit_t.end(), [](int k) { return k == 1; }));
  }
}

TEST_CASE("bijectivity by exhaustion up to 10^5") {
  for (auto [p, n] : {std::pair{2u, 16u}, {3u, 10u}, {99991u, 1u}}) {
    P1Table t(PrimePower(p, n));
    std::vector<char> s(t.size()), u(t.size());
    for (P1Index x = 0; x < t.size(); ++x) {
      s[t.act_sigma(x)] = 1;
      u[t.act_tau(x)] = 1;
    }
    CHECK(std::count(s.begin(), s.end(), 1) == static_cast<long>(t.size()));
    CHECK(std::count(u.begin(), u.end(), 1) == static_cast<long>(t.size()));
  }
}
