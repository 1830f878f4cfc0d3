#include "conegb/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace conegb {

namespace {

std::int64_t degree_of(const TermOrdering& o, const Term& t, SugarDegree sd) {
  return sd == SugarDegree::Weighted ? o.weighted_degree(t) : t.degree();
}

std::int64_t input_sugar(const TermOrdering& o, const OrderedPolynomial& f, SugarDegree sd) {
  std::int64_t s = 0;
  for (const auto& m : f.terms) s = std::max(s, degree_of(o, m.term, sd));
  return s;
}

Term lead_under(const TermOrdering& o, const OrderedPolynomial& p) {
  const Term* best = &p.terms.front().term;
  for (const auto& m : p.terms)
    if (o.compare(m.term, *best) > 0) best = &m.term;
  return *best;
}

struct Acceptance {
  FeasibleWeight mu;
  ConstraintSystem lp;
  bool lp_changed = false;
};

}  // namespace

SugarDegree sugar_degree(const StrategyConfig& cfg) {
  return cfg.weighted_sugar ? SugarDegree::Weighted : SugarDegree::Standard;
}

GBState GBState::initial(std::size_t nvars, std::uint64_t seed) {
  GBState s;
  s.nvars = nvars;
  s.order = TermOrdering::grevlex(nvars);
  s.lp = ConstraintSystem(nvars, 1.0);
  s.psi = BoundaryVectorSet::standard_basis(nvars);
  s.lead_ideal = MonomialIdeal(nvars);
  s.rng.seed(seed);
  return s;
}

std::size_t GBState::push_basis(OrderedPolynomial p) {
  if (p.is_zero()) throw std::invalid_argument("GBState::push_basis: zero polynomial");
  recorded_lts.push_back(p.lead().term);
  basis.push_back(std::move(p));
  useful.push_back(1);
  return basis.size() - 1;
}

void GBState::set_order(TermOrdering o) {
  order = std::move(o);
  for (auto& g : basis) reorder(order, g);
  for (auto& f : inputs) reorder(order, f);
}

void update_pairs_gm(GBState& state, std::size_t new_index, const StrategyConfig& cfg) {
  const SugarDegree sd = sugar_degree(cfg);
  const Term& h = state.recorded_lts.at(new_index);
  const auto& hp = state.basis[new_index];

  struct Fresh {
    std::size_t k;
    Term lcm;
    bool coprime;
  };
  std::vector<Fresh> fresh;
  for (std::size_t k = 0; k < new_index; ++k) {
    if (!state.useful[k]) continue;
    const Term& lk = state.recorded_lts[k];
    fresh.push_back(Fresh{k, lk.lcm(h), lk.coprime(h)});
  }

  auto make_pair = [&](const Fresh& f) {
    const auto& g = state.basis[f.k];
    CriticalPair p;
    p.i = static_cast<std::int64_t>(f.k);
    p.j = static_cast<std::int64_t>(new_index);
    p.lcm = f.lcm;
    p.sugar = std::max(g.sugar + degree_of(state.order, f.lcm / state.recorded_lts[f.k], sd),
                       hp.sugar + degree_of(state.order, f.lcm / h, sd));
    p.age = state.next_age++;
    return p;
  };

  if (!cfg.prune_pairs) {
    for (const auto& f : fresh) state.pairs.push_back(make_pair(f));
    return;
  }

  // Old pairs whose lcm is strictly divisible by h in the sense of Gebauer-Moller.
  std::erase_if(state.pairs, [&](const CriticalPair& p) {
    if (p.is_input() || !h.divides(p.lcm)) return false;
    const Term li = state.recorded_lts[p.i].lcm(h);
    const Term lj = state.recorded_lts[p.j].lcm(h);
    return li != p.lcm && lj != p.lcm;
  });

  // Chain criterion among the new pairs; exactly one survivor per lcm.
  std::vector<Fresh> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    const auto& cur = fresh[a];
    bool dominated = false;
    if (!cur.coprime) {
      for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b)
        dominated = fresh[b].lcm.divides(cur.lcm);
      for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
        dominated = kept[b].lcm.divides(cur.lcm);
    }
    if (!dominated) kept.push_back(cur);
  }
  // Product criterion.
  for (const auto& f : kept)
    if (!f.coprime) state.pairs.push_back(make_pair(f));

  for (std::size_t k = 0; k < new_index; ++k)
    if (state.useful[k] && h.divides(state.recorded_lts[k])) state.useful[k] = 0;
}

std::optional<CriticalPair> select_pair(GBState& state, const StrategyConfig& cfg) {
  if (state.pairs.empty()) return std::nullopt;
  const SugarDegree sd = sugar_degree(cfg);
  const TermOrdering& o = state.order;
  for (auto& p : state.pairs)
    if (p.is_input()) p.lcm = state.inputs[p.i].lead().term;

  auto better = [&](const CriticalPair& a, const CriticalPair& b) {
    switch (cfg.strategy) {
      case Strategy::Sugar: {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        const auto da = degree_of(o, a.lcm, sd);
        const auto db = degree_of(o, b.lcm, sd);
        if (da != db) return da < db;
        break;
      }
      case Strategy::MinDeg: {
        const auto da = degree_of(o, a.lcm, sd);
        const auto db = degree_of(o, b.lcm, sd);
        if (da != db) return da < db;
        break;
      }
      case Strategy::Normal:
        break;
    }
    const auto c = o.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return a.age < b.age;
  };
  auto best = state.pairs.begin();
  for (auto it = state.pairs.begin() + 1; it != state.pairs.end(); ++it)
    if (better(*it, *best)) best = it;
  CriticalPair chosen = std::move(*best);
  state.pairs.erase(best);
  return chosen;
}

std::vector<Term> possible_lts(GBState& state, const Polynomial& r, const StrategyConfig& cfg) {
  if (r.is_zero()) throw std::invalid_argument("possible_lts: zero polynomial");
  const TermOrdering& sigma = state.order;
  const auto supp = r.support();
  const Term t = leading_monomial(sigma, r).term;

  std::vector<Term> survivors;
  if (cfg.use_boundary_vectors) {
    survivors = filter_by_boundary_vectors(state.psi, t, supp);
    state.stats.rejected_by_corners += static_cast<std::int64_t>(supp.size() - survivors.size());
  } else {
    survivors = supp;
  }

  std::vector<Term> candidates;
  for (const auto& u : survivors) {
    const bool divides_another =
        std::any_of(survivors.begin(), survivors.end(), [&](const Term& v) { return u.properly_divides(v); });
    if (!divides_another) candidates.push_back(u);
  }
  if (candidates.size() <= 1) return candidates;

  struct Ranked {
    Term term;
    HilbertData data;
    std::uint64_t shuffle_key;
  };
  std::vector<Ranked> ranked;
  for (auto& c : candidates) {
    auto data = hilbert_data(state.lead_ideal.with(c));
    const std::uint64_t key = cfg.seed != 0 ? state.rng() : 0;
    ranked.push_back(Ranked{std::move(c), std::move(data), key});
  }
  std::stable_sort(ranked.begin(), ranked.end(), [&](const Ranked& a, const Ranked& b) {
    switch (compare_candidates(a.data, b.data)) {
      case CandidateComparison::ABetter: return true;
      case CandidateComparison::BBetter: return false;
      case CandidateComparison::Tie: break;
    }
    if (cfg.seed != 0) return a.shuffle_key < b.shuffle_key;
    // Hilbert-equal: prefer the term the current ordering ranks lowest.
    return sigma.compare(a.term, b.term) < 0;
  });
  std::vector<Term> out;
  out.reserve(ranked.size());
  for (auto& rk : ranked) out.push_back(std::move(rk.term));
  return out;
}

MonitorResult monitor_lts(const GBState& state, const FeasibleWeight& tau, ConstraintSystem lp_candidate,
                          std::span<const Term> targets) {
  if (targets.size() != state.basis.size())
    throw std::invalid_argument("monitor_lts: one target per basis element required");
  MonitorResult result;
  result.lp = std::move(lp_candidate);
  FeasibleWeight mu = tau;
  for (;;) {
    const auto trial = TermOrdering::weighted(mu.weights, Tiebreak::Grevlex);
    bool changed = false;
    bool added_any = false;
    for (std::size_t k = 0; k < state.basis.size(); ++k) {
      const Term lead = lead_under(trial, state.basis[k]);
      if (lead == targets[k]) continue;
      changed = true;
      Constraint c(targets[k].difference(lead));
      if (result.lp.add(c)) {
        result.added.insert(c);
        added_any = true;
      }
    }
    if (!changed) {
      result.accepted = true;
      result.mu = std::move(mu);
      return result;
    }
    if (!added_any) return result;  // the program already forbids this; numerics disagree
    auto next = feasible_weight(result.lp);
    if (!next) return result;
    mu = std::move(*next);
  }
}

void choose_an_ordering(GBState& state, std::size_t index, const StrategyConfig& cfg) {
  if (index + 1 != state.basis.size())
    throw std::invalid_argument("choose_an_ordering: index must be the newest basis element");
  const Polynomial r = to_polynomial(state.nvars, state.basis[index]);
  const Term sigma_lead = state.basis[index].lead().term;
  const auto candidates = possible_lts(state, r, cfg);

  std::vector<Term> targets = state.recorded_lts;
  FeasibleWeight current;
  current.weights.assign(state.order.weight().begin(), state.order.weight().end());

  auto try_candidate = [&](const Term& c) -> std::optional<Acceptance> {
    const ConstraintSet batch = constraints_for(c, std::span<const Term>(candidates));
    ConstraintSet fresh;
    for (const auto& k : batch)
      if (!state.lp.contains(k)) fresh.insert(k);
    targets[index] = c;
    ConstraintSystem candidate_lp = state.lp;
    FeasibleWeight start = current;
    if (!fresh.empty()) {
      ++state.stats.feasibility_batches;
      if (cfg.use_disjoint_cones && state.rejects.is_rejected(fresh, state.lp)) {
        ++state.stats.rejected_by_disjoint_cones;
        return std::nullopt;
      }
      candidate_lp.add(fresh);
      auto w = feasible_weight(candidate_lp);
      if (!w) {
        state.rejects.register_reject(fresh);
        ++state.stats.lps_failed;
        return std::nullopt;
      }
      start = std::move(*w);
    }
    auto mon = monitor_lts(state, start, std::move(candidate_lp), targets);
    if (!mon.accepted) {
      ConstraintSet failed = fresh;
      failed.insert(mon.added.begin(), mon.added.end());
      if (!failed.empty()) state.rejects.register_reject(failed);
      if (!fresh.empty()) ++state.stats.lps_failed;
      return std::nullopt;
    }
    if (!fresh.empty()) ++state.stats.lps_solved;
    const bool changed = !fresh.empty() || !mon.added.empty();
    return Acceptance{std::move(*mon.mu), std::move(mon.lp), changed};
  };

  std::optional<Acceptance> accepted;
  Term chosen = sigma_lead;
  if (cfg.use_boundary_vectors) {
    // The filtered terms stand in for the compatible leading terms; the first
    // one (by Hilbert rank) whose program is feasible wins.
    for (const auto& c : candidates) {
      accepted = try_candidate(c);
      if (accepted) {
        chosen = c;
        break;
      }
    }
  } else {
    // Without boundary vectors, compatibility of every potential leading term
    // is settled by its own program before the best-ranked one is taken.
    for (const auto& c : candidates) {
      auto a = try_candidate(c);
      if (a && !accepted) {
        accepted = std::move(a);
        chosen = c;
      }
    }
  }

  state.recorded_lts[index] = chosen;
  if (accepted && accepted->lp_changed) {
    const auto& w = accepted->mu.weights;
    if (!std::equal(w.begin(), w.end(), state.order.weight().begin(), state.order.weight().end())) {
      state.set_order(TermOrdering::weighted(w, Tiebreak::Grevlex));
      ++state.stats.order_changes;
    }
    state.lp = std::move(accepted->lp);
    if (cfg.use_boundary_vectors) state.psi = compute_boundary_vectors(state.lp, accepted->mu.point);
  }
  state.stats.constraint_count = static_cast<std::int64_t>(state.lp.size());
  for (std::size_t k = 0; k < state.basis.size(); ++k)
    if (state.basis[k].lead().term != state.recorded_lts[k])
      throw std::logic_error("choose_an_ordering: a recorded leading term changed");
}

namespace {

RunResult finish(GBState& state) {
  RunResult out;
  out.order = state.order;
  out.lp = state.lp;
  out.stats = state.stats;
  out.working_lts = state.recorded_lts;
  for (const auto& g : state.basis) out.working_basis.push_back(to_polynomial(state.nvars, g));
  out.basis = interreduce(state.order, out.working_basis);
  for (const auto& g : out.basis) {
    const Term lead = leading_monomial(state.order, g).term;
    out.recorded_lts.push_back(lead);
  }
  return out;
}

RunResult run(std::span<const Polynomial> inputs, const StrategyConfig& cfg,
              const std::optional<TermOrdering>& fixed) {
  if (inputs.empty()) throw std::invalid_argument("Buchberger: empty input system");
  const std::size_t n = inputs.front().nvars();
  for (const auto& f : inputs) {
    if (f.nvars() != n) throw std::invalid_argument("Buchberger: inputs live in different rings");
    if (f.is_zero()) throw std::invalid_argument("Buchberger: zero input polynomial");
  }
  const SugarDegree sd = sugar_degree(cfg);
  GBState state = GBState::initial(n, cfg.seed);
  if (fixed) {
    if (fixed->nvars() != n) throw std::invalid_argument("Buchberger: ordering has wrong variable count");
    state.set_order(*fixed);
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto f = order_by(state.order, inputs[i]);
    f.sugar = input_sugar(state.order, f, sd);
    CriticalPair p;
    p.i = static_cast<std::int64_t>(i);
    p.j = -1;
    p.lcm = f.lead().term;
    p.sugar = f.sugar;
    p.age = state.next_age++;
    state.inputs.push_back(std::move(f));
    state.pairs.push_back(std::move(p));
  }

  while (auto pair = select_pair(state, cfg)) {
    OrderedPolynomial s = pair->is_input()
                              ? state.inputs[pair->i]
                              : s_polynomial_ordered(state.order, state.basis[pair->i], state.basis[pair->j], sd);
    auto r = reduce_ordered(state.order, std::move(s), state.basis, ReductionMode::Full, sd);
    ++state.stats.spolys_processed;
    if (r.is_zero()) {
      ++state.stats.zero_reductions;
      continue;
    }
    make_monic(r);
    const auto idx = state.push_basis(std::move(r));
    if (!fixed) choose_an_ordering(state, idx, cfg);
    state.lead_ideal.add(state.recorded_lts[idx]);
    update_pairs_gm(state, idx, cfg);
  }
  return finish(state);
}

}  // namespace

RunResult dynamic_run(std::span<const Polynomial> inputs, const StrategyConfig& cfg) {
  if (cfg.static_mode) {
    if (inputs.empty()) throw std::invalid_argument("Buchberger: empty input system");
    return run(inputs, cfg, TermOrdering::grevlex(inputs.front().nvars()));
  }
  return run(inputs, cfg, std::nullopt);
}

RunResult static_run(std::span<const Polynomial> inputs, const TermOrdering& order, const StrategyConfig& cfg) {
  return run(inputs, cfg, order);
}

std::vector<Polynomial> interreduce(const TermOrdering& order, std::span<const Polynomial> basis) {
  std::vector<OrderedPolynomial> ordered;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    ordered.push_back(order_by(order, g));
  }
  std::sort(ordered.begin(), ordered.end(), [&](const OrderedPolynomial& a, const OrderedPolynomial& b) {
    return order.compare(a.lead().term, b.lead().term) < 0;
  });
  std::vector<OrderedPolynomial> minimal;
  for (auto& g : ordered) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const OrderedPolynomial& h) {
      return h.lead().term.divides(g.lead().term);
    });
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> out;
  std::vector<char> active(minimal.size(), 1);
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    active[k] = 0;
    auto r = reduce_ordered(order, minimal[k], minimal, ReductionMode::Full, SugarDegree::Standard, active);
    active[k] = 1;
    make_monic(r);
    out.push_back(to_polynomial(minimal[k].is_zero() ? 0 : minimal[k].lead().term.size(), r));
  }
  return out;
}

bool is_groebner_oracle(std::span<const Polynomial> basis, const TermOrdering& order) {
  std::vector<OrderedPolynomial> ordered;
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("is_groebner_oracle: zero polynomial");
    ordered.push_back(order_by(order, g));
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      auto s = s_polynomial_ordered(order, ordered[i], ordered[j]);
      if (!reduce_ordered(order, std::move(s), ordered).is_zero()) return false;
    }
  }
  return true;
}

std::size_t distinct_terms(std::span<const Polynomial> basis) {
  std::set<Term> terms;
  for (const auto& g : basis)
    for (const auto& m : g.monomials()) terms.insert(m.term);
  return terms.size();
}

}  // namespace conegb
