#include <doctest.h>

#include "oracles/oracles.hpp"
#include "tbound/hecke_symbols.hpp"

using namespace tbound;

namespace {

using Key = std::pair<oracle::i64, oracle::i64>;

Key key_of(const P1Table& t, P1Index i) {
  auto [c, d] = t.pair(i);
  return oracle::p1_canonical(static_cast<oracle::i64>(c), static_cast<oracle::i64>(d),
                              static_cast<oracle::i64>(t.modulus()));
}

std::map<Key, std::int64_t> as_map(const P1Table& t, const SymbolVector& v) {
  std::map<Key, std::int64_t> out;
  for (auto [i, c] : v.terms()) out[key_of(t, i)] = c;
  return out;
}

}  // namespace

TEST_CASE("tuple enumeration agrees with brute force") {
  for (std::int64_t r = 1; r <= 14; ++r) {
    std::vector<HeckeTuple> ours;
    for_each_hecke_tuple(r, [&](const HeckeTuple& x) { ours.push_back(x); });
    auto ref = oracle::hecke_tuples(r);
    CHECK(ours.size() == ref.size());
    for (const auto& x : ours) {
      CHECK(x.u * x.t - x.v * x.w == r);
      CHECK(x.v < x.u);
      CHECK(x.w < x.t);
    }
  }
}

TEST_CASE("winding image examples") {
  P1Table t11(PrimePower(11, 1));
  auto one = winding_image(1, t11);
  CHECK(one.terms().size() == 1);
  CHECK(one.coefficient(*t11.index_of_pair(0, 1)) == 1);

  auto two = winding_image(2, t11);
  CHECK(two.terms().size() == 2);
  CHECK(two.coefficient(*t11.index_of_pair(0, 1)) == 3);
  CHECK(two.coefficient(*t11.index_of_pair(6, 1)) == 1);

  P1Table t32(PrimePower(2, 5));
  auto w = winding_image(2, t32);
  // (0,1) twice, (1,2) once; (0,2) dropped
  CHECK(w.coefficient(*t32.index_of_pair(0, 1)) == 2);
  CHECK(w.coefficient_total() == 3);
  auto census = winding_tuple_census(2, t32);
  CHECK(census.tuples == 4);
  CHECK(census.dropped == 1);
}

TEST_CASE("winding images match the oracle") {
  for (auto [p, n] : {std::pair{11u, 1u}, {2u, 5u}, {3u, 4u}, {101u, 1u}, {5u, 3u}}) {
    P1Table t(PrimePower(p, n));
    for (std::int64_t r = 1; r <= 12; ++r) {
      auto img = winding_image(r, t);
      CHECK(as_map(t, img) == oracle::winding_image(r, p, static_cast<oracle::i64>(t.modulus())));
      auto census = winding_tuple_census(r, t);
      CHECK(img.coefficient_total() == static_cast<std::int64_t>(census.tuples - census.dropped));
    }
  }
}

TEST_CASE("Sigma_r examples and closed form") {
  P1Table t11(PrimePower(11, 1));
  auto s2 = sigma_r_set(2, t11);
  CHECK(s2.members == std::set<P1Index>{*t11.index_of_pair(0, 1)});
  auto s1 = sigma_r_set(1, t11);
  CHECK(s1.members == std::set<P1Index>{*t11.index_of_pair(0, 1)});

  for (auto [p, n] : {std::pair{11u, 1u}, {2u, 5u}, {3u, 4u}, {101u, 1u}, {7u, 3u}, {2u, 10u}}) {
    P1Table t(PrimePower(p, n));
    auto N = static_cast<oracle::i64>(t.modulus());
    for (std::int64_t r = 1; r <= 12; ++r) {
      auto s = sigma_r_set(r, t);
      std::set<Key> mine;
      for (auto i : s.members) mine.insert(key_of(t, i));
      CHECK(mine == oracle::sigma_r(r, p, N));
      // monotone up to the leading class
      auto next = sigma_r_set(r + 1, t);
      auto lead = *t.index_of_pair(1, r + 1);
      for (auto i : s.members) CHECK((next.contains(i) || i == lead));
      // support of T_i{0,oo}, i <= r, lies in Sigma_r plus (1 : r)
      auto own_lead = *t.index_of_pair(1, r);
      for (std::int64_t i = 1; i <= r; ++i)
      {
        auto img = winding_image(i, t);
        for (auto [idx, c] : img.terms()) CHECK((s.contains(idx) || idx == own_lead));
      }
    }
  }
}

TEST_CASE("support consistency exhaustively for r <= 12 and p^n <= 2000") {
  for (auto [p, n] : {std::pair{2u, 10u}, {3u, 6u}, {5u, 4u}, {7u, 3u}, {11u, 3u}, {13u, 2u}, {1999u, 1u}}) {
    P1Table t(PrimePower(p, n));
    for (std::int64_t r = 1; r <= 12; ++r) {
      auto s = sigma_r_set(r, t);
      auto own_lead = *t.index_of_pair(1, r);
      for (std::int64_t i = 1; i <= r; ++i)
      {
        auto img = winding_image(i, t);
        for (auto [idx, c] : img.terms()) CHECK((s.contains(idx) || idx == own_lead));
      }
    }
  }
}

TEST_CASE("hecke span rank") {
  CHECK(hecke_span_rank(PrimePower(11, 1), 1, FieldSpec::rationals()) == 1);
  CHECK(hecke_span_rank(PrimePower(11, 1), 0, FieldSpec::rationals()) == 0);
  for (auto [p, n] : {std::pair{2u, 7u}, {3u, 4u}, {37u, 1u}, {5u, 3u}}) {
    PrimePower pp(p, n);
    P1Table t(pp);
    auto pq = build_presentation(t, FieldSpec::rationals());
    std::size_t prev = 0;
    for (std::int64_t i = 1; i <= 10; ++i) {
      std::size_t rq = hecke_span_rank(pq, t, i);
      CHECK(rq >= prev);
      CHECK(rq <= pq.quotient_dim());
      prev = rq;
      for (std::uint64_t l : {2, 3, 5}) {
        if (l == p) continue;
        auto pl = build_presentation(t, FieldSpec::prime(l));
        CHECK(hecke_span_rank(pl, t, i) <= rq);
      }
    }
  }
}

TEST_CASE("coordinate rank over Q uses integer elimination") {
  std::vector<CoordinateVector> v{std::vector<Rational>{Rational(1, 2), 1}, std::vector<Rational>{1, 2},
                                  std::vector<Rational>{0, Rational(1, 3)}};
  CHECK(coordinate_rank(v, FieldSpec::rationals()) == 2);
  std::vector<CoordinateVector> w{std::vector<std::uint32_t>{1, 2}, std::vector<std::uint32_t>{2, 4}};
  CHECK(coordinate_rank(w, FieldSpec::prime(5)) == 1);
}

TEST_CASE("criterion reports") {
  auto r = check_rank_criterion(4201, 1, 1, 3);
  CHECK(r.s == 2);
  CHECK(r.required_rank == 2);
  CHECK(r.achieved_rank == 2);
  CHECK(r.pass);
  CHECK(r.threshold_satisfied);
  CHECK(r.threshold.threshold == 4160);
  CHECK_FALSE(r.contradicts_guarantee());

  auto small = check_rank_criterion(11, 1, 1, 3);
  CHECK_FALSE(small.threshold_satisfied);
  CHECK(small.required_rank == 2);

  auto two = check_rank_criterion(2, 5, 1, 3);
  CHECK(two.s == 3);
  CHECK(two.threshold.c_squared == 129);

  auto same = check_rank_criterion(11, 1, 1, 11);
  CHECK(same.l_equals_p);

  std::vector<std::uint64_t> ls{3, 5, 7};
  auto many = check_rank_criterion(4201, 1, 1, ls);
  REQUIRE(many.size() == 3);
  for (const auto& x : many) {
    CHECK(x.pass);
    CHECK(x.threshold_satisfied == criterion_threshold(4201, 1).satisfied_by(4201));
  }
}
