#include "tbound/winding_paths.hpp"

#include <stdexcept>

namespace tbound {

std::string to_string(ChainLabel label) {
  switch (label) {
    case ChainLabel::A: return "A";
    case ChainLabel::B: return "B";
    case ChainLabel::Bprime: return "Bprime";
  }
  return "unknown";
}

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::hit_sigma_r: return "hit_sigma_r";
    case StopReason::hit_leading_class: return "hit_leading_class";
    case StopReason::wrapped: return "wrapped";
  }
  return "unknown";
}

std::vector<std::uint64_t> Chain::interval(std::uint64_t modulus) const {
  std::vector<std::uint64_t> out;
  out.reserve(interval_length);
  for (std::uint64_t k = 0; k < interval_length; ++k) {
    auto offset = static_cast<std::int64_t>(k % modulus) * direction;
    out.push_back(reduce_mod(static_cast<std::int64_t>(interval_start) + offset, modulus));
  }
  return out;
}

namespace {

enum class Verdict { clean, sigma_r, leading };

struct Walker {
  const P1Table& table;
  const SigmaRSet& sigma_r;
  std::optional<P1Index> leading;
  Chain chain;

  Verdict classify(P1Index idx, bool is_start) const {
    if (sigma_r.contains(idx)) return Verdict::sigma_r;
    if (!is_start && leading && idx == *leading) return Verdict::leading;
    return Verdict::clean;
  }

  bool visit(P1Index idx, bool main_track, bool is_start) {
    chain.visited.push_back({idx, main_track});
    auto v = classify(idx, is_start);
    if (v == Verdict::clean) return true;
    chain.stop_reason = v == Verdict::sigma_r ? StopReason::hit_sigma_r : StopReason::hit_leading_class;
    chain.stop_vertex = idx;
    return false;
  }

  // main -> intermediate -> next main, with the step given as a pair of maps.
  // need_intermediate: count a main vertex only once its intermediate is clean.
  template <class First, class Second>
  void run(P1Index start, First first, Second second, bool need_intermediate) {
    chain.start = start;
    const std::uint64_t cap = table.modulus() + 1;
    P1Index cur = start;
    chain.stop_reason = StopReason::wrapped;
    for (std::uint64_t step = 0; step < cap; ++step) {
      if (step > 0 && cur == start) return;
      if (!visit(cur, true, step == 0)) return;
      if (!need_intermediate) ++chain.interval_length;
      P1Index mid = first(cur);
      if (!visit(mid, false, false)) return;
      if (need_intermediate) ++chain.interval_length;
      cur = second(mid);
    }
  }
};

Walker make_walker(ChainLabel label, std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r) {
  if (r < 1) throw std::invalid_argument("chain walk needs r >= 1");
  if (sigma_r.r != r) throw std::invalid_argument("Sigma_r set built for a different r");
  Walker w{table, sigma_r, table.index_of_pair(1, r), {}};
  w.chain.label = label;
  w.chain.r = r;
  return w;
}

std::uint64_t affine_residue(P1Index idx, const P1Table& table) {
  auto pt = table.point(idx);
  if (pt.kind != P1Point::Kind::affine) throw std::logic_error("main-track vertex is not affine");
  return pt.value;
}

bool divides_r(std::int64_t r, const P1Table& table) {
  return r % static_cast<std::int64_t>(table.p()) == 0;
}

}  // namespace

Chain walk_chain_A(std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r) {
  auto w = make_walker(ChainLabel::A, r, table, sigma_r);
  P1Index start = *table.index_of_pair(-r - 1, 1);
  w.chain.interval_start = affine_residue(start, table);
  w.chain.direction = -1;
  auto tau2 = [&](P1Index x) { return table.act_tau(table.act_tau(x)); };
  auto sigma = [&](P1Index x) { return table.act_sigma(x); };
  w.run(start, sigma, tau2, true);
  return std::move(w.chain);
}

Chain walk_chain_B(std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r) {
  if (divides_r(r, table)) throw std::invalid_argument("p divides r: use walk_chain_B_prime");
  auto w = make_walker(ChainLabel::B, r, table, sigma_r);
  P1Index start = *table.index_of_pair(1, r);
  w.chain.interval_start = affine_residue(start, table);
  w.chain.direction = -1;
  auto tau2 = [&](P1Index x) { return table.act_tau(table.act_tau(x)); };
  auto sigma = [&](P1Index x) { return table.act_sigma(x); };
  w.run(start, sigma, tau2, false);
  return std::move(w.chain);
}

Chain walk_chain_B_prime(std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r) {
  if (!divides_r(r, table)) throw std::invalid_argument("p does not divide r: use walk_chain_B");
  auto w = make_walker(ChainLabel::Bprime, r, table, sigma_r);
  P1Index start = *table.index_of_pair(r, r - 1);
  w.chain.interval_start = affine_residue(start, table);
  w.chain.direction = +1;
  auto tau = [&](P1Index x) { return table.act_tau(x); };
  auto sigma = [&](P1Index x) { return table.act_sigma(x); };
  w.run(start, tau, sigma, false);
  return std::move(w.chain);
}

Chain walk_second_chain(std::int64_t r, const P1Table& table, const SigmaRSet& sigma_r) {
  return divides_r(r, table) ? walk_chain_B_prime(r, table, sigma_r) : walk_chain_B(r, table, sigma_r);
}

IntervalBound chain_interval_bound(const Chain& chain, std::uint64_t modulus, std::int64_t D) {
  if (D < 1) throw std::invalid_argument("D must be >= 1");
  Rational pn(Integer(static_cast<unsigned long>(modulus)));
  Rational d(Integer(static_cast<long>(D)));
  IntervalBound out;
  if (chain.label == ChainLabel::A) {
    out.bound = pn / d - d - 2;
  } else {
    out.bound = pn / (d * d) - 2;
  }
  out.in_regime = sgn(out.bound) > 0 && !(chain.label == ChainLabel::B && chain.r == 1);
  Rational len(Integer(static_cast<unsigned long>(chain.interval_length)));
  out.satisfied = len >= out.bound;
  return out;
}

ChainAudit audit_chain(const Chain& chain, const P1Table& table, const SigmaRSet& sigma_r) {
  ChainAudit audit;
  const std::size_t n = chain.visited.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool is_stop = (i + 1 == n) && chain.stop_vertex.has_value();
    if (!is_stop && sigma_r.contains(chain.visited[i].index)) audit.avoids_sigma_r = false;
  }

  std::vector<std::uint64_t> mains;
  for (const auto& v : chain.visited) {
    if (!v.main_track) continue;
    auto pt = table.point(v.index);
    if (pt.kind != P1Point::Kind::affine) {
      audit.consecutive = false;
      continue;
    }
    mains.push_back(pt.value);
  }
  auto expected = chain.interval(table.modulus());
  if (expected.size() > mains.size()) {
    audit.consecutive = false;
  } else {
    for (std::size_t k = 0; k < expected.size(); ++k)
      if (mains[k] != expected[k]) audit.consecutive = false;
  }

  if (chain.label == ChainLabel::A) {
    // visited = m0, s0, m1, s1, ...
    for (std::uint64_t k = 0; k < chain.interval_length; ++k) {
      std::size_t mi = 2 * k, si = 2 * k + 1;
      if (si >= n || chain.visited[si].main_track ||
          chain.visited[si].index != table.act_sigma(chain.visited[mi].index))
        audit.sigma_images_on_chain = false;
    }
  }
  return audit;
}

std::optional<InversePair> find_inverse_pair(const IntervalPair& pair, const PrimePower& pp) {
  const std::uint64_t m = pp.modulus_word();
  const std::uint64_t p = pp.p_word();
  if (pair.a.length == 0 || pair.b.length == 0) return std::nullopt;

  std::optional<InversePair> best;
  if (pair.a.length <= pair.b.length) {
    for (std::uint64_t k = 0; k < pair.a.length; ++k) {
      std::uint64_t y = pair.a.start + k;
      if (y % p == 0) continue;
      std::uint64_t z = (m - *inverse_mod(y % m, m)) % m;
      if (pair.b.contains(z)) {
        best = InversePair{y, z};
        break;
      }
    }
  } else {
    for (std::uint64_t k = 0; k < pair.b.length; ++k) {
      std::uint64_t z = pair.b.start + k;
      if (z % p == 0) continue;
      std::uint64_t y = (m - *inverse_mod(z % m, m)) % m;
      if (pair.a.contains(y) && (!best || y < best->y)) best = InversePair{y, z};
    }
  }
  if (best && mulmod(best->y, best->z, m) != m - 1)
    throw std::logic_error("inverse pair post-check failed");
  return best;
}

PairRequirement pair_requirement(const PrimePower& pp) {
  PairRequirement req;
  req.p = pp.p_word();
  req.n = pp.n();
  req.c_prime = req.p == 2 ? "8*sqrt(2)" : "8";
  req.squared_factor = req.p == 2 ? 128 : 64;
  req.p_cubed_n = ipow(pp.modulus(), 3);
  Integer target = req.squared_factor * req.p_cubed_n;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
  if (root * root < target) root += 1;
  req.min_product = root;
  return req;
}

}  // namespace tbound
