#include "tbound/cli.hpp"

#include "tbound/bounds.hpp"
#include "tbound/hecke_symbols.hpp"
#include "tbound/kernels.hpp"
#include "tbound/oldclass.hpp"
#include "tbound/qexp.hpp"
#include "tbound/rel_homology.hpp"
#include "tbound/winding_paths.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace tbound {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Output {
  bool csv = false;
  std::string out;
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::string str(const Integer& x) { return x.get_str(); }
std::string str(const Rational& x) { return x.get_str(); }

int emit(const Output& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::filesystem::path path(o.out);
  if (const char* dir = std::getenv("OUTPUT_DIR"); dir && *dir && path.is_relative()) path = std::filesystem::path(dir) / path;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << path.string() << "\n";
    return kUsage;
  }
  f << text;
  return kOk;
}

int emit_json(const Output& o, const Json& j) { return emit(o, j.dump(2) + "\n"); }

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

const char* yes(bool b) { return b ? "true" : "false"; }

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 2; x <= bound; ++x)
    if (is_prime(x)) out.push_back(x);
  return out;
}

// --- p1 ---

struct P1Args {
  std::uint64_t p = 0;
  unsigned n = 1;
  bool list = false;
};

int run_p1(const P1Args& a, const Output& o) {
  P1Table table(PrimePower(a.p, a.n));
  if (o.csv) {
    std::string text = csv_line({"index", "c", "d", "sigma", "tau"});
    for (P1Index i = 0; i < table.size(); ++i) {
      auto [c, d] = table.pair(i);
      text += csv_line({std::to_string(i), std::to_string(c), std::to_string(d), std::to_string(table.act_sigma(i)),
                        std::to_string(table.act_tau(i))});
    }
    return emit(o, text);
  }
  Json j = header("p1");
  j["p"] = a.p;
  j["n"] = a.n;
  j["modulus"] = table.modulus();
  j["size"] = table.size();
  j["affine"] = table.modulus();
  j["infinite_branch"] = table.size() - table.modulus();
  if (a.list) {
    Json pts = Json::array();
    for (P1Index i = 0; i < table.size(); ++i)
      pts.push_back({{"index", i}, {"point", table.describe(i)}, {"sigma", table.act_sigma(i)}, {"tau", table.act_tau(i)}});
    j["points"] = pts;
  }
  return emit_json(o, j);
}

// --- homology ---

struct HomologyArgs {
  std::uint64_t p = 0;
  unsigned n = 1;
  std::string field = "Q";
  bool smith = false;
};

int run_homology(const HomologyArgs& a, const Output& o) {
  PrimePower pp(a.p, a.n);
  P1Table table(pp);
  auto field = FieldSpec::parse(a.field);
  auto relations = invariant_generators(table);
  H1Presentation pres(relations, field);

  Json smith = nullptr;
  if (a.smith) {
    smith = Json::object();
    try {
      auto inv = smith_invariants(relations);
      std::size_t ones = 0;
      Json other = Json::array();
      for (const auto& d : inv) {
        if (d == 1) ++ones;
        else other.push_back(str(d));
      }
      smith["computed"] = true;
      smith["rank"] = inv.size();
      smith["unit_invariants"] = ones;
      smith["nontrivial"] = other;
      smith["all_one"] = other.empty();
    } catch (const std::length_error& e) {
      smith["computed"] = false;
      smith["reason"] = e.what();
    }
  }

  if (o.csv) {
    std::string text = csv_line({"p", "n", "field", "p1_size", "relation_rank", "quotient_dim"});
    text += csv_line({std::to_string(a.p), std::to_string(a.n), field.to_string(), std::to_string(pres.p1_size()),
                      std::to_string(pres.relation_rank()), std::to_string(pres.quotient_dim())});
    return emit(o, text);
  }
  Json j = header("homology");
  j["p"] = a.p;
  j["n"] = a.n;
  j["field"] = field.to_string();
  j["p1_size"] = pres.p1_size();
  j["sigma_rows"] = relations.sigma_rows();
  j["tau_rows"] = relations.tau_rows();
  j["relation_rank"] = pres.relation_rank();
  j["quotient_dim"] = pres.quotient_dim();
  if (a.smith) j["smith"] = smith;
  return emit_json(o, j);
}

// --- criterion ---

struct CriterionArgs {
  std::uint64_t p = 0;
  unsigned n = 1;
  std::uint64_t d = 1;
  std::uint64_t l = 0;
  std::uint64_t all_l_up_to = 0;
};

Json criterion_json(const CriterionReport& r) {
  Json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["d"] = r.d;
  j["s"] = r.s;
  j["l"] = r.l;
  j["required_rank"] = r.required_rank;
  j["achieved_rank"] = r.achieved_rank;
  j["quotient_dim"] = r.quotient_dim;
  j["pass"] = r.pass;
  j["threshold"] = str(r.threshold.threshold);
  j["c_squared"] = r.threshold.c_squared;
  j["threshold_satisfied"] = r.threshold_satisfied;
  j["l_equals_p"] = r.l_equals_p;
  j["contradicts_guarantee"] = r.contradicts_guarantee();
  return j;
}

int run_criterion(const CriterionArgs& a, const Output& o) {
  std::vector<std::uint64_t> ls;
  if (a.all_l_up_to > 0) ls = primes_up_to(a.all_l_up_to);
  else if (a.l > 0) ls = {a.l};
  else throw CLI::ValidationError("criterion", "give --l or --all-l-up-to");
  for (auto l : ls)
    if (!is_prime(l)) throw std::invalid_argument("l must be prime: " + std::to_string(l));

  auto reports = check_rank_criterion(a.p, a.n, a.d, ls);
  bool contradiction = false;
  for (const auto& r : reports) contradiction = contradiction || r.contradicts_guarantee();

  int rc;
  if (o.csv) {
    std::string text = csv_line({"p", "n", "d", "s", "l", "required_rank", "achieved_rank", "quotient_dim", "pass",
                                 "threshold", "threshold_satisfied"});
    for (const auto& r : reports)
      text += csv_line({std::to_string(r.p), std::to_string(r.n), std::to_string(r.d), std::to_string(r.s),
                        std::to_string(r.l), std::to_string(r.required_rank), std::to_string(r.achieved_rank),
                        std::to_string(r.quotient_dim), yes(r.pass), str(r.threshold.threshold),
                        yes(r.threshold_satisfied)});
    rc = emit(o, text);
  } else if (reports.size() == 1 && a.all_l_up_to == 0) {
    Json j = header("criterion");
    j.update(criterion_json(reports.front()));
    rc = emit_json(o, j);
  } else {
    Json j = header("criterion");
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(criterion_json(r));
    j["reports"] = arr;
    rc = emit_json(o, j);
  }
  if (rc != kOk) return rc;
  return contradiction ? kCheckFailed : kOk;
}

// --- paths ---

struct PathsArgs {
  std::uint64_t p = 0;
  unsigned n = 1;
  std::int64_t r = 1;
  std::int64_t d = 0;
};

Json chain_json(const Chain& c, const P1Table& table, const SigmaRSet& sigma_r, std::int64_t D) {
  auto bound = chain_interval_bound(c, table.modulus(), D);
  auto audit = audit_chain(c, table, sigma_r);
  Json j;
  j["label"] = to_string(c.label);
  j["start"] = table.describe(c.start);
  j["direction"] = c.direction;
  j["interval_start"] = c.interval_start;
  j["interval_length"] = c.interval_length;
  j["stop_reason"] = to_string(c.stop_reason);
  j["stop_vertex"] = c.stop_vertex ? Json(table.describe(*c.stop_vertex)) : Json(nullptr);
  j["bound"] = str(bound.bound);
  j["in_regime"] = bound.in_regime;
  j["bound_satisfied"] = bound.satisfied;
  j["avoids_sigma_r"] = audit.avoids_sigma_r;
  j["consecutive"] = audit.consecutive;
  j["sigma_images_on_chain"] = audit.sigma_images_on_chain;
  Json visited = Json::array();
  for (const auto& v : c.visited) visited.push_back(table.describe(v.index));
  j["visited"] = visited;
  return j;
}

int run_paths(const PathsArgs& a, const Output& o) {
  PrimePower pp(a.p, a.n);
  P1Table table(pp);
  const std::int64_t D = a.d > 0 ? a.d : a.r;
  auto sigma_r = sigma_r_set(a.r, table);
  Chain first = walk_chain_A(a.r, table, sigma_r);
  Chain second = walk_second_chain(a.r, table, sigma_r);
  bool ok = true;
  for (const Chain* c : {&first, &second}) {
    auto b = chain_interval_bound(*c, table.modulus(), D);
    ok = ok && audit_chain(*c, table, sigma_r).ok() && (!b.in_regime || b.satisfied);
  }
  int rc;
  if (o.csv) {
    std::string text = csv_line({"p", "n", "r", "chain", "interval_len", "bound", "pass"});
    for (const Chain* c : {&first, &second}) {
      auto b = chain_interval_bound(*c, table.modulus(), D);
      bool pass = audit_chain(*c, table, sigma_r).ok() && (!b.in_regime || b.satisfied);
      text += csv_line({std::to_string(a.p), std::to_string(a.n), std::to_string(a.r), to_string(c->label),
                        std::to_string(c->interval_length), str(b.bound), yes(pass)});
    }
    rc = emit(o, text);
  } else {
    Json j = header("paths");
    j["p"] = a.p;
    j["n"] = a.n;
    j["r"] = a.r;
    j["D"] = D;
    j["sigma_r_size"] = sigma_r.members.size();
    j["chains"] = Json::array({chain_json(first, table, sigma_r, D), chain_json(second, table, sigma_r, D)});
    j["pass"] = ok;
    rc = emit_json(o, j);
  }
  if (rc != kOk) return rc;
  return ok ? kOk : kCheckFailed;
}

struct SweepArgs {
  std::vector<std::string> moduli;
  std::int64_t r_max = 6;
  bool serial = false;
};

int run_paths_sweep(const SweepArgs& a, const Output& o) {
  std::vector<PrimePower> moduli;
  for (const auto& m : a.moduli) moduli.push_back(PrimePower::parse(m));
  auto rows = a.serial ? path_sweep_serial(moduli, a.r_max) : path_sweep_omp(moduli, a.r_max);
  bool ok = true;
  std::string text = csv_line({"p", "n", "r", "chain", "interval_len", "bound", "pass"});
  for (const auto& r : rows) {
    ok = ok && r.pass();
    text += csv_line({std::to_string(r.p), std::to_string(r.n), std::to_string(r.r), r.chain,
                      std::to_string(r.interval_len), str(r.bound), yes(r.pass())});
  }
  int rc = emit(o, text);
  if (rc != kOk) return rc;
  return ok ? kOk : kCheckFailed;
}

struct PairsArgs {
  std::uint64_t p = 0;
  unsigned n = 1;
  std::uint64_t len_a = 0;
  std::uint64_t len_b = 0;
  bool serial = false;
};

int run_paths_pairs(const PairsArgs& a, const Output& o) {
  PrimePower pp(a.p, a.n);
  auto req = pair_requirement(pp);
  const std::uint64_t lb = a.len_b > 0 ? a.len_b : a.len_a;
  auto scan = a.serial ? inverse_pair_scan_serial(pp, a.len_a, lb) : inverse_pair_scan_omp(pp, a.len_a, lb);
  Integer product = Integer(static_cast<unsigned long>(a.len_a)) * Integer(static_cast<unsigned long>(lb));
  bool meets = req.satisfied_by(product);
  // a counterexample only contradicts the pair bound when the product meets the requirement
  bool ok = !meets || scan.counterexamples.empty();
  Json j = header("paths pairs");
  j["p"] = a.p;
  j["n"] = a.n;
  j["length_a"] = a.len_a;
  j["length_b"] = lb;
  j["c_prime"] = req.c_prime;
  j["required_product"] = str(req.min_product);
  j["product"] = str(product);
  j["meets_requirement"] = meets;
  j["pairs_checked"] = scan.pairs_checked;
  Json ce = Json::array();
  for (const auto& pr : scan.counterexamples)
    ce.push_back({{"a_start", pr.a.start}, {"a_length", pr.a.length}, {"b_start", pr.b.start}, {"b_length", pr.b.length}});
  j["counterexamples"] = ce;
  j["pass"] = ok;
  int rc = emit_json(o, j);
  if (rc != kOk) return rc;
  return ok ? kOk : kCheckFailed;
}

// --- qexp ---

struct RelationsArgs {
  std::size_t order = 200;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  std::size_t nmax = 30;
};

int run_qexp_relations(const RelationsArgs& a, const Output& o) {
  auto rep = verify_relations(a.order, a.trials, a.seed);
  auto ident = verify_first_coefficient(std::min(a.nmax, a.order), a.order, std::min<std::size_t>(a.trials, 10), a.seed);
  bool ok = rep.pass() && ident.pass();
  int rc;
  if (o.csv) {
    std::string text = csv_line({"relation", "expect_equal", "holds", "min_compared_order", "trials"});
    for (const auto& c : rep.checks)
      text += csv_line({"\"" + c.name + "\"", yes(c.expect_equal), yes(c.holds), std::to_string(c.min_compared_order),
                        std::to_string(c.trials)});
    rc = emit(o, text);
  } else {
    Json j = header("qexp verify-relations");
    j["order"] = a.order;
    j["trials"] = a.trials;
    j["seed"] = a.seed;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      Json x;
      x["relation"] = c.name;
      x["expect_equal"] = c.expect_equal;
      x["holds"] = c.holds;
      x["min_compared_order"] = c.min_compared_order;
      if (!c.expect_equal) x["witness"] = c.witness;
      checks.push_back(x);
    }
    j["relations"] = checks;
    j["first_coefficient"] = {{"nmax", ident.nmax}, {"trials", ident.trials}, {"failures", ident.failures},
                              {"pass", ident.pass()}};
    j["pass"] = ok;
    rc = emit_json(o, j);
  }
  if (rc != kOk) return rc;
  return ok ? kOk : kCheckFailed;
}

struct UpMatrixArgs {
  std::string kase = "p-not-divides-M";
  unsigned k = 1;
  std::string a_p = "0";
  int eps_p = 1;
  unsigned lambda = 2;
  std::uint64_t p = 2;
};

Json census_json(const std::vector<JordanBlock>& census) {
  Json arr = Json::array();
  for (const auto& b : census) arr.push_back({{"eigenvalue", to_string(b.eigenvalue)}, {"size", b.size}});
  return arr;
}

int run_qexp_up_matrix(const UpMatrixArgs& a, const Output& o) {
  if (!is_prime(a.p)) throw std::invalid_argument("p must be prime");
  auto kase = parse_oldclass_case(a.kase);
  Quadratic ap = Quadratic::parse(a.a_p);
  if (a.lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  Integer c_int = a.eps_p * ipow(Integer(static_cast<unsigned long>(a.p)), a.lambda - 1);
  Quadratic c{Rational(c_int)};
  auto m = build_Up_matrix(kase, ap, c, a.k);
  auto cp = charpoly(m);
  auto expected = expected_Up_charpoly(kase, ap, c, a.k);
  auto census = jordan_structure(m);
  auto predicted = predicted_census(kase, ap, c, a.k);
  auto form = oldclass_normal_form(kase, ap, c);
  bool ok = cp == expected && census == predicted;

  if (o.csv) {
    std::string text;
    for (const auto& row : to_strings(m)) {
      std::vector<std::string> cells;
      for (const auto& x : row) cells.push_back("\"" + x + "\"");
      text += csv_line(cells);
    }
    int rc = emit(o, text);
    return rc != kOk ? rc : (ok ? kOk : kCheckFailed);
  }
  Json j = header("qexp up-matrix");
  j["case"] = to_string(kase);
  j["p"] = a.p;
  j["k"] = a.k;
  j["a_p"] = to_string(ap);
  j["eps_p"] = a.eps_p;
  j["lambda"] = a.lambda;
  j["c"] = to_string(c);
  j["shape"] = kase == OldclassCase::p_divides_M ? "M1" : "M2";
  j["matrix"] = to_strings(m);
  Json cpj = Json::array();
  for (const auto& x : cp) cpj.push_back(to_string(x));
  j["charpoly"] = cpj;
  j["charpoly_matches"] = cp == expected;
  j["jordan"] = census_json(census);
  j["jordan_predicted"] = census_json(predicted);
  j["jordan_matches"] = census == predicted;
  j["normal_form"] = to_string(form);
  if (kase == OldclassCase::p_not_divides_M) j["normal_form_matrix"] = to_strings(normal_form_matrix(ap, c, a.k));
  j["pass"] = ok;
  int rc = emit_json(o, j);
  if (rc != kOk) return rc;
  return ok ? kOk : kCheckFailed;
}

// --- bounds ---

struct BoundsArgs {
  std::uint64_t p = 0;
  std::uint64_t d = 1;
  std::uint64_t l = 0;
  bool original_order = false;
  bool table = false;
  std::uint64_t d_max = 5;
  bool constants = false;
};

Json bound_json(const BoundReport& r) {
  Json j;
  j["formula"] = r.formula;
  j["p"] = r.p;
  j["d"] = r.d;
  j["l"] = r.l;
  j["case"] = r.case_tag;
  j["value"] = str(r.value);
  j["notes"] = r.notes;
  return j;
}

int run_bounds(const BoundsArgs& a, const Output& o) {
  if (a.constants) {
    auto r = constants_consistency();
    Json j = header("bounds constants");
    j["lambda"] = str(r.lambda);
    j["lambda_below_one"] = r.lambda_below_one;
    j["odd"] = {{"ratio", str(r.odd_ratio)}, {"bound", 65}, {"holds", r.odd_ok}, {"margin", str(r.odd_margin)}};
    j["even"] = {{"ratio", str(r.even_ratio)}, {"bound", 129}, {"holds", r.even_ok}, {"margin", str(r.even_margin)}};
    j["a_step_ok"] = r.a_step_ok;
    j["d_plus_two_step_ok"] = r.d_plus_two_step_ok;
    j["b_step_as_printed_ok"] = r.b_step_as_printed_ok;
    j["b_step_derivable_constant"] = r.b_step_derivable_constant;
    j["lambda_derivable"] = str(r.lambda_derivable);
    j["derivable_odd_ok"] = r.derivable_odd_ok;
    j["derivable_even_ok"] = r.derivable_even_ok;
    j["pass"] = r.pass();
    int rc = emit_json(o, j);
    if (rc != kOk) return rc;
    return r.pass() ? kOk : kCheckFailed;
  }
  if (a.table) {
    if (a.d_max < 1) throw std::invalid_argument("--d-max must be >= 1");
    std::string text = csv_line({"d", "p_ge_5", "p_eq_3", "p_eq_2"});
    for (std::uint64_t d = 1; d <= a.d_max; ++d)
      text += csv_line({std::to_string(d), str(level_bound(5, d, a.original_order)), str(level_bound(3, d, a.original_order)),
                        str(level_bound(2, d, a.original_order))});
    return emit(o, text);
  }
  if (a.p == 0) throw CLI::ValidationError("bounds", "give --p, --table or --constants");
  auto cor = level_report(a.p, a.d, a.original_order);
  auto thr = criterion_threshold(a.p, a.d);
  const std::uint64_t l = a.l > 0 ? a.l : auxiliary_prime(a.p);
  auto variants = point_bound_variants(l, a.d);
  if (o.csv) {
    std::string text = csv_line({"formula", "p", "d", "l", "case", "value"});
    text += csv_line({cor.formula, std::to_string(cor.p), std::to_string(cor.d), std::to_string(cor.l), cor.case_tag, str(cor.value)});
    text += csv_line({"criterion_threshold", std::to_string(thr.p), std::to_string(thr.d), "0",
                      "s=" + std::to_string(thr.s), str(thr.threshold)});
    for (const auto& v : variants)
      text += csv_line({v.formula, std::to_string(v.p), std::to_string(v.d), std::to_string(v.l), "\"" + v.case_tag + "\"",
                        str(v.value)});
    return emit(o, text);
  }
  Json j = header("bounds");
  j["level_bound"] = bound_json(cor);
  j["original_order"] = a.original_order;
  j["criterion_threshold"] = {{"p", thr.p}, {"d", thr.d}, {"s", thr.s}, {"c_squared", thr.c_squared},
                              {"threshold", str(thr.threshold)}};
  Json pv = Json::array();
  for (const auto& v : variants) pv.push_back(bound_json(v));
  j["point_bound"] = pv;
  return emit_json(o, j);
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Exact checks for torsion bounds on modular curves X_0(p^n)", "tbound"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--csv", out.csv, "CSV instead of JSON");
  app.add_option("--out", out.out, "write to this file (relative to OUTPUT_DIR when set)");

  P1Args p1;
  auto* c_p1 = app.add_subcommand("p1", "enumerate P^1(Z/p^n Z) with the sigma and tau permutations");
  c_p1->add_option("--p", p1.p, "prime")->required();
  c_p1->add_option("--n", p1.n, "exponent")->check(CLI::PositiveNumber);
  c_p1->add_flag("--list", p1.list, "list every point");

  HomologyArgs hom;
  auto* c_hom = app.add_subcommand("homology", "relative homology presentation");
  c_hom->add_option("--p", hom.p, "prime")->required();
  c_hom->add_option("--n", hom.n, "exponent")->check(CLI::PositiveNumber);
  c_hom->add_option("--field", hom.field, "Q or a prime l");
  c_hom->add_flag("--smith", hom.smith, "Smith invariants of the relation matrix (column cap SMITH_CAP)");

  CriterionArgs cri;
  auto* c_cri = app.add_subcommand("criterion", "F_l-independence of T_1{0,oo}, ..., T_sd{0,oo}");
  c_cri->add_option("--p", cri.p, "prime")->required();
  c_cri->add_option("--n", cri.n, "exponent")->check(CLI::PositiveNumber);
  c_cri->add_option("--d", cri.d, "degree")->check(CLI::PositiveNumber);
  auto* opt_l = c_cri->add_option("--l", cri.l, "prime l");
  c_cri->add_option("--all-l-up-to", cri.all_l_up_to, "every prime l up to this bound")->excludes(opt_l);

  PathsArgs pa;
  SweepArgs sw;
  PairsArgs pr;
  auto* c_paths = app.add_subcommand("paths", "chains A, B, B' avoiding Sigma_r");
  c_paths->add_option("--p", pa.p, "prime");
  c_paths->add_option("--n", pa.n, "exponent")->check(CLI::PositiveNumber);
  c_paths->add_option("--r", pa.r, "index r")->check(CLI::PositiveNumber);
  c_paths->add_option("--d", pa.d, "D in the interval bounds (default r)");
  auto* c_sweep = c_paths->add_subcommand("sweep", "grid of instances, CSV summary");
  c_sweep->add_option("--moduli", sw.moduli, "prime powers such as 101 7^3 2^10")->required()->delimiter(',');
  c_sweep->add_option("--r-max", sw.r_max, "largest r")->check(CLI::PositiveNumber);
  c_sweep->add_flag("--serial", sw.serial, "serial reference loop");
  auto* c_pairs = c_paths->add_subcommand("pairs", "inverse-pair search over all interval pairs");
  c_pairs->add_option("--p", pr.p, "prime")->required();
  c_pairs->add_option("--n", pr.n, "exponent")->check(CLI::PositiveNumber);
  c_pairs->add_option("--len-a", pr.len_a, "|A|")->required()->check(CLI::PositiveNumber);
  c_pairs->add_option("--len-b", pr.len_b, "|B| (default |A|)");
  c_pairs->add_flag("--serial", pr.serial, "serial reference loop");

  RelationsArgs rel;
  UpMatrixArgs up;
  auto* c_qexp = app.add_subcommand("qexp", "Hecke operators on q-expansions");
  c_qexp->require_subcommand(1);
  auto* c_rel = c_qexp->add_subcommand("verify-relations", "commutation relations on random series");
  c_rel->add_option("--order", rel.order, "truncation order")->check(CLI::Range(8, 100000));
  c_rel->add_option("--trials", rel.trials, "random series")->check(CLI::PositiveNumber);
  c_rel->add_option("--seed", rel.seed, "seed");
  c_rel->add_option("--nmax", rel.nmax, "check a_1(T_n f) = a_n(f) up to this n");
  auto* c_up = c_qexp->add_subcommand("up-matrix", "U_p on an oldclass {f, B_p f, ..., B_{p^k} f}");
  c_up->add_option("--case", up.kase, "p-divides-M or p-not-divides-M");
  c_up->add_option("--k", up.k, "k")->check(CLI::PositiveNumber);
  c_up->add_option("--a-p", up.a_p, "a_p, e.g. -2, 3/2, 2*sqrt(2)");
  c_up->add_option("--eps-p", up.eps_p, "eps(p)");
  c_up->add_option("--lambda", up.lambda, "weight");
  c_up->add_option("--p", up.p, "prime p");

  BoundsArgs bo;
  auto* c_bounds = app.add_subcommand("bounds", "closed-form bounds and constants");
  c_bounds->add_option("--p", bo.p, "prime");
  c_bounds->add_option("--d", bo.d, "degree")->check(CLI::PositiveNumber);
  c_bounds->add_option("--l", bo.l, "prime l for the 2(1 + l^d) bound (default the auxiliary prime)");
  c_bounds->add_flag("--original-order", bo.original_order, "multiply by (l^d - 1)");
  c_bounds->add_flag("--table", bo.table, "CSV table over d = 1..d-max");
  c_bounds->add_option("--d-max", bo.d_max, "rows of the table");
  c_bounds->add_flag("--constants", bo.constants, "exact check of the closing constants");

  for (auto* sub : {c_p1, c_hom, c_cri, c_paths, c_sweep, c_pairs, c_rel, c_up, c_bounds}) {
    sub->add_flag("--csv", out.csv, "CSV instead of JSON");
    sub->add_option("--out", out.out, "output file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c_p1->parsed()) return run_p1(p1, out);
    if (c_hom->parsed()) return run_homology(hom, out);
    if (c_cri->parsed()) return run_criterion(cri, out);
    if (c_sweep->parsed()) return run_paths_sweep(sw, out);
    if (c_pairs->parsed()) return run_paths_pairs(pr, out);
    if (c_paths->parsed()) {
      if (pa.p == 0) throw CLI::ValidationError("paths", "--p is required");
      return run_paths(pa, out);
    }
    if (c_rel->parsed()) return run_qexp_relations(rel, out);
    if (c_up->parsed()) return run_qexp_up_matrix(up, out);
    if (c_bounds->parsed()) return run_bounds(bo, out);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << app.help();
  return kUsage;
}

}  // namespace tbound
