// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conegb/boundary.hpp"
#include "conegb/engine.hpp"
#include "conegb/hilbert.hpp"
#include "conegb/simplex.hpp"
#include "conegb/systems.hpp"
#include "support/oracles.hpp"
#include "support/systems.hpp"

using namespace conegb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

StrategyConfig sugar() {
  StrategyConfig cfg;
  cfg.strategy = Strategy::Sugar;
  return cfg;
}

struct DynamicRecord {
  std::string name;
  std::vector<Polynomial> inputs;
  RunResult result;
};

// Every dynamic run made by criteria 3-5, for the lead-stability sweep.
std::deque<DynamicRecord> g_runs;

const RunResult& record(const std::string& name, const std::vector<Polynomial>& f, const StrategyConfig& cfg) {
  g_runs.push_back({name, f, dynamic_run(f, cfg)});
  return g_runs.back().result;
}

bool verified(const std::vector<Polynomial>& inputs, const RunResult& r) {
  if (!is_groebner_oracle(r.basis, r.order)) return false;
  return std::all_of(inputs.begin(), inputs.end(),
                     [&](const Polynomial& f) { return reduce(r.order, f, r.basis).is_zero(); });
}

int g_failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

void criterion1() {
  const auto f = generate_cyclic(4);
  struct Case {
    const char* name;
    TermOrdering order;
    std::size_t pols, terms;
  };
  const std::vector<Case> cases{
      {"lex", TermOrdering::lex(4), 6, 18},
      {"grevlex", TermOrdering::grevlex(4), 7, 24},
      {"matrix", TermOrdering::matrix({{1, 3, 2, 4}, {1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}}), 5, 19},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto start = Clock::now();
    const auto r = static_run(f, c.order, sugar());
    const double t = seconds_since(start);
    const auto terms = distinct_terms(r.basis);
    const bool good = r.basis.size() == c.pols && terms == c.terms && t < 5.0;
    ok = ok && good;
    detail << c.name << " " << r.basis.size() << "/" << terms << " (" << t << " s); ";
  }
  report(1, ok, "static Cyclic-4 " + detail.str());
}

void criterion2() {
  struct Case {
    const char* name;
    std::vector<Polynomial> f;
    std::size_t pols;
    long terms;
    double limit;
  };
  // Katsura-6 is the six-variable system.
  const std::vector<Case> cases{
      {"Cyclic-5", generate_cyclic(5), 20, 85, 1e9},
      {"Cyclic-6", generate_cyclic(6), 45, 199, 120.0},
      {"Katsura-6", generate_katsura(5), 22, 54, 1e9},
  };
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto start = Clock::now();
    const auto r = static_run(c.f, TermOrdering::grevlex(c.f.front().nvars()), sugar());
    const double t = seconds_since(start);
    const long terms = static_cast<long>(distinct_terms(r.basis));
    const bool good = r.basis.size() == c.pols && std::abs(terms - c.terms) <= 2 && t < c.limit;
    ok = ok && good;
    detail << c.name << " " << r.basis.size() << "/" << terms << " (" << t << " s); ";
  }
  report(2, ok, "static grevlex " + detail.str());
}

void criterion3() {
  std::vector<fixtures::Named> systems;
  for (std::size_t n = 4; n <= 6; ++n) systems.push_back({"Cyclic-" + std::to_string(n), generate_cyclic(n)});
  for (std::size_t n = 3; n <= 6; ++n) systems.push_back({"Katsura-" + std::to_string(n), generate_katsura(n - 1)});
  const std::size_t named = systems.size();
  for (std::size_t k = 0; k < named; ++k)
    systems.push_back({systems[k].name + " hom.", fixtures::homogenized(systems[k].polys)});
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const int deg = std::uniform_int_distribution<int>(1, 3)(rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    systems.push_back({"random-" + std::to_string(i), fixtures::random_system(rng, n, deg, count)});
  }
  int good = 0;
  std::ostringstream failed;
  std::ostringstream sizes;
  const auto start = Clock::now();
  for (const auto& s : systems) {
    const auto& r = record(s.name, s.polys, sugar());
    if (verified(s.polys, r)) ++good;
    else failed << " " << s.name;
    if (s.name.rfind("random", 0) != 0) sizes << s.name << "=" << r.basis.size() << " ";
  }
  std::ostringstream detail;
  detail << good << "/" << systems.size() << " dynamic bases verified (" << seconds_since(start) << " s); "
         << sizes.str();
  if (good != static_cast<int>(systems.size())) detail << "failed:" << failed.str();
  report(3, good == static_cast<int>(systems.size()), detail.str());
}

const RunResult* find_run(const std::string& name) {
  for (const auto& r : g_runs)
    if (r.name == name) return &r.result;
  return nullptr;
}

void criterion4() {
  struct Case {
    const char* name;
    std::size_t static_pols;
    double target;
  };
  const std::vector<Case> cases{{"Cyclic-5", 20, 1.5 * 11}, {"Cyclic-6", 45, 1.5 * 20}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    const auto* r = find_run(c.name);
    const double pols = r ? static_cast<double>(r->basis.size()) : 1e9;
    ok = ok && r && pols <= static_cast<double>(c.static_pols) && pols <= c.target;
    detail << c.name << " dynamic " << pols << " vs static " << c.static_pols << " (target <= " << c.target << "); ";
  }
  report(4, ok, detail.str());
}

void criterion5() {
  const auto f = generate_cyclic(5);
  StrategyConfig off = sugar();
  off.use_boundary_vectors = false;
  off.use_disjoint_cones = false;
  const auto& with = *find_run("Cyclic-5");
  const auto& without = record("Cyclic-5 no criteria", f, off);
  const bool ok = without.stats.lps_solved > 0 &&
                  4 * with.stats.lps_solved <= without.stats.lps_solved &&
                  with.stats.constraint_count <= without.stats.constraint_count && verified(f, without);
  std::ostringstream detail;
  detail << "Cyclic-5 LPs solved " << with.stats.lps_solved << " with criteria vs " << without.stats.lps_solved
         << " without (ratio " << static_cast<double>(with.stats.lps_solved) / std::max<std::int64_t>(1, without.stats.lps_solved)
         << "), constraints " << with.stats.constraint_count << " vs " << without.stats.constraint_count;
  report(5, ok, detail.str());
}

void criterion6() {
  ConstraintSystem sys(3);
  for (const auto& row : std::vector<std::vector<std::int64_t>>{{2, -1, 0}, {-1, 4, 0}, {1, 1, -3}, {0, -1, 1}})
    sys.add(Constraint(row));
  BoundaryOptions opts;
  opts.level = 30;
  opts.epsilon = 0;
  const auto psi = compute_boundary_vectors(sys, std::vector<double>{2, 1, 1}, opts);
  const std::vector<std::vector<double>> expected{{15, 7.5, 7.5}, {20, 5, 5}, {18, 4.5, 7.5}};
  auto matches = [](const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (std::abs(a[k] - b[k]) > 1e-6) return false;
    return true;
  };
  bool ok = psi.size() == expected.size();
  for (const auto& e : expected)
    ok = ok && std::any_of(psi.vectors.begin(), psi.vectors.end(), [&](const auto& v) { return matches(v, e); });
  std::ostringstream detail;
  detail << "boundary vectors at level 30:";
  for (const auto& v : psi.vectors) detail << " (" << v[0] << "," << v[1] << "," << v[2] << ")";
  report(6, ok, detail.str());
}

void criterion7() {
  std::mt19937_64 rng(777);
  int agree = 0, feasible = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto rows = oracle::random_rows(rng, n, std::uniform_int_distribution<std::size_t>(1, 6)(rng), 5);
    ConstraintSystem sys(n);
    for (const auto& r : rows) sys.add(Constraint(r));
    const auto w = feasible_weight(sys);
    const bool expected = oracle::strictly_feasible(rows, n);
    const bool exact_ok = !w || sys.strictly_satisfied_by(w->weights);
    if (w.has_value() == expected && exact_ok) ++agree;
    if (expected) ++feasible;
  }
  std::ostringstream detail;
  detail << agree << "/500 feasibility verdicts match Fourier-Motzkin (" << feasible << " feasible)";
  report(7, agree == 500, detail.str());
}

void criterion8() {
  std::mt19937_64 rng(888);
  int agree = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    std::vector<Term> gens;
    for (std::size_t g = 0; g < count; ++g) {
      std::vector<std::int32_t> e(n);
      for (auto& x : e) x = std::uniform_int_distribution<int>(0, 4)(rng);
      gens.emplace_back(e);
    }
    const MonomialIdeal ideal(n, gens);
    std::vector<std::vector<std::int32_t>> raw;
    for (const auto& g : ideal.generators()) raw.emplace_back(g.exponents().begin(), g.exponents().end());
    const auto h = hilbert_data(ideal);
    bool ok = true;
    for (std::int64_t d = 0; d <= 10; ++d) ok = ok && h.series_coefficient(d) == oracle::count_standard(raw, n, d);
    if (ok) ++agree;
  }
  std::ostringstream detail;
  detail << agree << "/200 Hilbert series match brute-force counts for d = 0..10";
  report(8, agree == 200, detail.str());
}

void criterion9() {
  std::size_t checked = 0, bad = 0;
  for (const auto& run : g_runs) {
    const auto& r = run.result;
    bool ok = r.working_basis.size() == r.working_lts.size();
    for (std::size_t k = 0; ok && k < r.working_basis.size(); ++k)
      ok = leading_term(r.order, r.working_basis[k]).first == r.working_lts[k];
    for (std::size_t k = 0; ok && k < r.basis.size(); ++k)
      ok = leading_term(r.order, r.basis[k]).first == r.recorded_lts[k];
    ok = ok && r.lp.strictly_satisfied_by(r.order.weight());
    checked += r.working_basis.size();
    if (!ok) ++bad;
  }
  std::ostringstream detail;
  detail << g_runs.size() << " dynamic runs, " << checked << " recorded leading terms checked, " << bad
         << " runs with a changed lead";
  report(9, bad == 0 && !g_runs.empty(), detail.str());
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9};
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      criteria[k]();
    } catch (const std::exception& e) {
      std::printf("FAIL criterion %zu: exception %s\n", k + 1, e.what());
      ++g_failures;
    }
  }
  std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ALL PASS" : "SOME FAILED", g_failures);
  return g_failures == 0 ? 0 : 1;
}
