#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "conegb/boundary.hpp"
#include "conegb/constraints.hpp"
#include "conegb/hilbert.hpp"
#include "conegb/ordering.hpp"
#include "conegb/polynomial.hpp"
#include "conegb/reduction.hpp"
#include "conegb/rejects.hpp"
#include "conegb/simplex.hpp"

namespace conegb {

enum class Strategy { Sugar, Normal, MinDeg };

struct StrategyConfig {
  bool static_mode = false;
  Strategy strategy = Strategy::Normal;
  bool weighted_sugar = false;
  bool use_boundary_vectors = true;
  bool use_disjoint_cones = true;
  /// 0 keeps the deterministic tie-break among Hilbert-equal candidates;
  /// any other value shuffles such ties with this seed.
  std::uint64_t seed = 0;
  /// Gebauer-Moller pair pruning; off only for cross-checking.
  bool prune_pairs = true;
};

struct Stats {
  std::int64_t rejected_by_corners = 0;
  std::int64_t rejected_by_disjoint_cones = 0;
  std::int64_t lps_solved = 0;
  std::int64_t lps_failed = 0;
  std::int64_t constraint_count = 0;
  std::int64_t spolys_processed = 0;
  std::int64_t zero_reductions = 0;
  /// Candidate constraint batches that reached the feasibility stage; always
  /// lps_solved + lps_failed + rejected_by_disjoint_cones.
  std::int64_t feasibility_batches = 0;
  std::int64_t order_changes = 0;
};

/// A pending S-polynomial. j < 0 encodes an input pair (f, 0) where i indexes
/// GBState::inputs; otherwise i < j index GBState::basis.
struct CriticalPair {
  std::int64_t i = 0;
  std::int64_t j = -1;
  Term lcm;
  std::int64_t sugar = 0;
  std::uint64_t age = 0;

  bool is_input() const noexcept { return j < 0; }
};

/// Everything a Buchberger run mutates. Basis elements are kept monic and
/// sorted under the current ordering.
struct GBState {
  std::size_t nvars = 0;
  std::vector<OrderedPolynomial> basis;
  std::vector<Term> recorded_lts;
  /// 0 once a later leading term divides this element's leading term; such
  /// elements still reduce but spawn no new pairs.
  std::vector<char> useful;
  std::vector<OrderedPolynomial> inputs;
  TermOrdering order;
  ConstraintSystem lp;
  BoundaryVectorSet psi;
  RejectRegistry rejects;
  std::vector<CriticalPair> pairs;
  MonomialIdeal lead_ideal{0};
  Stats stats;
  std::uint64_t next_age = 0;
  std::mt19937_64 rng;

  /// Fresh state: weight (1,...,1) with grevlex ties, empty program, and the
  /// standard basis as boundary vectors.
  static GBState initial(std::size_t nvars, std::uint64_t seed = 0);

  /// Appends a basis element whose leading term is not chosen yet.
  std::size_t push_basis(OrderedPolynomial p);
  /// Sets the ordering and re-sorts every stored polynomial.
  void set_order(TermOrdering o);
};

SugarDegree sugar_degree(const StrategyConfig& cfg);

/// Creates the pairs (g, basis[new_index]) and prunes with Gebauer-Moller:
/// the product criterion, the chain criterion on new pairs (one pair per lcm),
/// and removal of old pairs whose lcm is strictly divisible by the new lead.
void update_pairs_gm(GBState& state, std::size_t new_index, const StrategyConfig& cfg);

/// Removes and returns the next pair; std::nullopt when none remain.
std::optional<CriticalPair> select_pair(GBState& state, const StrategyConfig& cfg);

/// Terms of r that may become its leading term, best first by the tentative
/// Hilbert function. Applies the boundary-vector filter (when enabled) and
/// then the divisibility criterion. Throws std::invalid_argument for r = 0.
std::vector<Term> possible_lts(GBState& state, const Polynomial& r, const StrategyConfig& cfg);

struct MonitorResult {
  bool accepted = false;
  std::optional<FeasibleWeight> mu;
  ConstraintSystem lp;
  /// Constraints added on top of the candidate program.
  ConstraintSet added;
};

/// Starting from the weight tau for `lp_candidate`, adds y.(t - u) for every
/// basis element whose leading term u under the trial ordering differs from
/// its target t, and re-solves until no target changes (accepted) or the
/// program becomes infeasible. `targets` has one term per basis element.
MonitorResult monitor_lts(const GBState& state, const FeasibleWeight& tau, ConstraintSystem lp_candidate,
                          std::span<const Term> targets);

/// Chooses the leading term of basis[index] (the newest element) and refines
/// the ordering accordingly, updating program, boundary vectors, rejects and
/// statistics. Throws std::logic_error if a previously recorded leading term
/// would change.
void choose_an_ordering(GBState& state, std::size_t index, const StrategyConfig& cfg);

struct RunResult {
  std::vector<Polynomial> basis;
  TermOrdering order;
  Stats stats;
  /// Leading terms under `order`, one per returned basis element.
  std::vector<Term> recorded_lts;
  ConstraintSystem lp;
  /// Every polynomial added during the run, before interreduction, with the
  /// leading term recorded for it when it was added.
  std::vector<Polynomial> working_basis;
  std::vector<Term> working_lts;
};

RunResult dynamic_run(std::span<const Polynomial> inputs, const StrategyConfig& cfg = {});
RunResult static_run(std::span<const Polynomial> inputs, const TermOrdering& order,
                     const StrategyConfig& cfg = {});

/// Interreduces: drops elements whose leading term is divisible by another's,
/// then fully reduces every tail and makes each element monic.
std::vector<Polynomial> interreduce(const TermOrdering& order, std::span<const Polynomial> basis);

/// Brute-force check that every S-polynomial of G reduces to zero modulo G.
bool is_groebner_oracle(std::span<const Polynomial> basis, const TermOrdering& order);

/// Number of distinct terms appearing across the polynomials.
std::size_t distinct_terms(std::span<const Polynomial> basis);

}  // namespace conegb
