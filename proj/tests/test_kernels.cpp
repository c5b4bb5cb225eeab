#include <doctest.h>

#include "tbound/kernels.hpp"

#include <omp.h>

using namespace tbound;

namespace {

struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

bool same_rows(const std::vector<PathSweepRow>& a, const std::vector<PathSweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto &x = a[i], &y = b[i];
    if (x.p != y.p || x.n != y.n || x.r != y.r || x.chain != y.chain || x.interval_len != y.interval_len ||
        x.bound != y.bound || x.in_regime != y.in_regime || x.bound_ok != y.bound_ok || x.audit_ok != y.audit_ok ||
        x.stop_reason != y.stop_reason)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("winding images: serial equals parallel") {
  P1Table t(PrimePower(2, 10));
  auto s = winding_images_serial(t, 20);
  for (int n : {1, 2, 4, 7}) {
    Threads th(n);
    CHECK(winding_images_omp(t, 20) == s);
  }
  CHECK(winding_images_omp(t, 0).empty());
}

TEST_CASE("batch reduction: serial equals parallel") {
  P1Table t(PrimePower(3, 5));
  auto imgs = winding_images_serial(t, 30);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    auto pres = build_presentation(t, f);
    auto s = reduce_batch_serial(pres, imgs);
    Threads th(4);
    CHECK(reduce_batch_omp(pres, imgs) == s);
  }
}

TEST_CASE("inverse-pair scan: serial equals parallel") {
  PrimePower pp(53, 1);
  for (auto [la, lb] : {std::pair{5u, 7u}, {20u, 20u}, {1u, 1u}}) {
    auto s = inverse_pair_scan_serial(pp, la, lb);
    Threads th(3);
    auto o = inverse_pair_scan_omp(pp, la, lb);
    CHECK(o.pairs_checked == s.pairs_checked);
    REQUIRE(o.counterexamples.size() == s.counterexamples.size());
    for (std::size_t i = 0; i < s.counterexamples.size(); ++i) {
      CHECK(o.counterexamples[i].a.start == s.counterexamples[i].a.start);
      CHECK(o.counterexamples[i].b.start == s.counterexamples[i].b.start);
    }
  }
  // short intervals do have counterexamples, and each one is genuine
  auto s = inverse_pair_scan_serial(pp, 1, 1);
  CHECK(s.pairs_checked == 52 * 52);
  CHECK(s.counterexamples.size() == 52 * 52 - 52);
  CHECK_THROWS(inverse_pair_scan_serial(pp, 0, 3));
  CHECK_THROWS(inverse_pair_scan_omp(pp, 53, 3));
}

TEST_CASE("path sweep: serial equals parallel") {
  std::vector<PrimePower> moduli{PrimePower(101, 1), PrimePower(7, 3), PrimePower(2, 10)};
  auto s = path_sweep_serial(moduli, 6);
  CHECK(s.size() == 3 * 6 * 2);
  for (int n : {1, 3, 8}) {
    Threads th(n);
    CHECK(same_rows(path_sweep_omp(moduli, 6), s));
  }
  for (const auto& row : s) CHECK(row.pass());
}
