#include "tbound/qexp.hpp"

#include <random>

namespace tbound {

DirichletCharacter DirichletCharacter::trivial(std::uint64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("character modulus must be >= 1");
  DirichletCharacter c;
  c.modulus_ = modulus;
  return c;
}

DirichletCharacter DirichletCharacter::quadratic(long discriminant, std::uint64_t modulus) {
  long m4 = ((discriminant % 4) + 4) % 4;
  if (discriminant == 1 || (m4 != 0 && m4 != 1))
    throw std::invalid_argument("not a discriminant: " + std::to_string(discriminant));
  long absd = discriminant < 0 ? -discriminant : discriminant;
  if (modulus % static_cast<std::uint64_t>(absd) != 0)
    throw std::invalid_argument("modulus must be a multiple of |D|");
  DirichletCharacter c;
  c.kind_ = Kind::quadratic;
  c.modulus_ = modulus;
  c.disc_ = discriminant;
  return c;
}

int DirichletCharacter::value(std::int64_t n) const {
  if (gcd64(n, static_cast<std::int64_t>(modulus_)) != 1) return 0;
  if (kind_ == Kind::trivial) return 1;
  Integer nn(static_cast<long>(n < 0 ? -n : n));
  int k = mpz_si_kronecker(disc_, nn.get_mpz_t());
  // (D/-1) = sign(D)
  return n < 0 && disc_ < 0 ? -k : k;
}

std::string DirichletCharacter::to_string() const {
  if (kind_ == Kind::trivial) return "trivial mod " + std::to_string(modulus_);
  return "(" + std::to_string(disc_) + "/.) mod " + std::to_string(modulus_);
}

Integer nebentypus_factor(const DirichletCharacter& eps, std::uint64_t p, unsigned weight) {
  if (weight < 1) throw std::invalid_argument("weight must be >= 1");
  int e = eps.value(static_cast<std::int64_t>(p));
  if (e == 0) return 0;
  return e * ipow(Integer(static_cast<unsigned long>(p)), weight - 1);
}

QExpansion<Rational> random_series(std::size_t order, unsigned weight, const DirichletCharacter& eps,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Rational> c(order + 1, Rational(0));
  for (std::size_t n = 1; n <= order; ++n) {
    c[n] = Rational(num(rng), den(rng));
    c[n].canonicalize();
  }
  return QExpansion<Rational>(std::move(c), order, weight, eps);
}

namespace {

using Series = QExpansion<Rational>;
using Op = std::function<Series(const Series&)>;

struct Relation {
  std::string name;
  Op lhs;
  Op rhs;
};

Op B(std::uint64_t d) { return [d](const Series& f) { return op_B(d, f); }; }
Op U(std::uint64_t q) { return [q](const Series& f) { return op_U(q, f); }; }
Op t(std::uint64_t p) { return [p](const Series& f) { return op_t(p, f); }; }
Op then(Op first, Op second) {
  return [first, second](const Series& f) { return second(first(f)); };
}
Op identity() { return [](const Series& f) { return f; }; }

// "X o Y" applies Y first
std::vector<Relation> relation_list() {
  return {
      {"B_2 o B_3 = B_3 o B_2", then(B(3), B(2)), then(B(2), B(3))},
      {"B_4 o B_6 = B_6 o B_4", then(B(6), B(4)), then(B(4), B(6))},
      {"t_5 o B_2 = B_2 o t_5", then(B(2), t(5)), then(t(5), B(2))},
      {"t_3 o B_4 = B_4 o t_3", then(B(4), t(3)), then(t(3), B(4))},
      {"t_5 o t_7 = t_7 o t_5", then(t(7), t(5)), then(t(5), t(7))},
      {"t_2 o t_3 = t_3 o t_2", then(t(3), t(2)), then(t(2), t(3))},
      {"t_3 o U_2 = U_2 o t_3", then(U(2), t(3)), then(t(3), U(2))},
      {"t_5 o U_3 = U_3 o t_5", then(U(3), t(5)), then(t(5), U(3))},
      {"U_2 o U_3 = U_3 o U_2", then(U(3), U(2)), then(U(2), U(3))},
      {"U_2 o B_3 = B_3 o U_2", then(B(3), U(2)), then(U(2), B(3))},
      {"U_5 o B_6 = B_6 o U_5", then(B(6), U(5)), then(U(5), B(6))},
      {"U_2 o B_4 = B_2", then(B(4), U(2)), B(2)},
      {"U_2 o B_8 = B_4", then(B(8), U(2)), B(4)},
      {"U_3 o B_3 = B_1", then(B(3), U(3)), identity()},
      {"U_3 o B_9 = B_3", then(B(9), U(3)), B(3)},
  };
}

DirichletCharacter trial_character(std::size_t trial) {
  // alternate the trivial character with (-4/.) so eps(p) takes both signs
  return trial % 2 == 0 ? DirichletCharacter::trivial(1) : DirichletCharacter::quadratic(-4, 4);
}

unsigned trial_weight(std::size_t trial) { return 2 + static_cast<unsigned>(trial % 3); }

std::string monomial_witness(std::size_t m) { return "q^" + std::to_string(m); }

}  // namespace

RelationReport verify_relations(std::size_t order, std::size_t trials, std::uint64_t seed) {
  if (order < 8) throw std::invalid_argument("verify_relations needs order >= 8");
  RelationReport report;
  report.order = order;
  report.trials = trials;
  report.seed = seed;

  std::vector<Series> inputs;
  for (std::size_t i = 0; i < trials; ++i)
    inputs.push_back(random_series(order, trial_weight(i), trial_character(i), seed + i));

  for (const auto& rel : relation_list()) {
    RelationCheck check;
    check.name = rel.name;
    check.trials = trials;
    check.holds = true;
    check.min_compared_order = order;
    for (const auto& f : inputs) {
      Series l = rel.lhs(f), r = rel.rhs(f);
      check.min_compared_order = std::min({check.min_compared_order, l.reliable(), r.reliable()});
      if (!l.agrees_with(r)) check.holds = false;
    }
    report.checks.push_back(check);
  }

  // t_3 and B_3 do not commute: search the monomials, then the random inputs
  RelationCheck witness;
  witness.name = "t_3 o B_3 != B_3 o t_3";
  witness.expect_equal = false;
  witness.trials = trials;
  witness.min_compared_order = order;
  auto lhs = then(B(3), t(3)), rhs = then(t(3), B(3));
  for (std::size_t m = 1; m <= order && witness.witness.empty(); ++m) {
    std::vector<Rational> c(order + 1, Rational(0));
    c[m] = 1;
    Series f(std::move(c), order, 2, DirichletCharacter::trivial(1));
    Series l = lhs(f), r = rhs(f);
    witness.min_compared_order = std::min({witness.min_compared_order, l.reliable(), r.reliable()});
    if (!l.agrees_with(r)) witness.witness = monomial_witness(m);
  }
  for (std::size_t i = 0; i < inputs.size() && witness.witness.empty(); ++i)
    if (!lhs(inputs[i]).agrees_with(rhs(inputs[i]))) witness.witness = "random series seed " + std::to_string(seed + i);
  witness.holds = !witness.witness.empty();
  report.checks.push_back(witness);
  return report;
}

CoefficientIdentityReport verify_first_coefficient(std::size_t nmax, std::size_t order, std::size_t trials,
                                                   std::uint64_t seed) {
  if (order < nmax) throw std::invalid_argument("order must be at least nmax");
  CoefficientIdentityReport report;
  report.nmax = nmax;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    // a level with small primes dividing it so both t_p and U_p occur
    DirichletCharacter eps = i % 2 == 0 ? DirichletCharacter::trivial(6) : DirichletCharacter::quadratic(-3, 3);
    Series f = random_series(order, trial_weight(i), eps, seed + i);
    for (std::uint64_t n = 1; n <= nmax; ++n) {
      Series g = op_T(n, f);
      if (g.reliable() < 1 || g.coeff(1) != f.coeff(n)) {
        if (std::find(report.failures.begin(), report.failures.end(), n) == report.failures.end())
          report.failures.push_back(n);
      }
    }
  }
  return report;
}

}  // namespace tbound
