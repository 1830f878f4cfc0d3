#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "conegb/constraints.hpp"

namespace conegb {

enum class SolveStatus { Feasible, Infeasible, Unbounded };
enum class Sense { Minimize, Maximize };

struct LinearEquality {
  std::vector<double> coeffs;
  double rhs = 0;
};

struct SimplexOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<double> point;
  double objective_value = 0;

  bool feasible() const noexcept { return status == SolveStatus::Feasible; }
};

/// Optimizes `objective` over the perturbed cone program
///   {a.y >= eps : a in sys} u {y_k >= eps} u {extra_equality},
/// where eps is sys.epsilon() unless overridden (0 gives the closure).
/// Returns an optimal extreme point, Infeasible, or Unbounded.
SimplexOutcome solve(const ConstraintSystem& sys, std::span<const double> objective, Sense sense,
                     const std::optional<LinearEquality>& extra_equality = std::nullopt,
                     std::optional<double> epsilon = std::nullopt);

struct ExactOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<mpq_class> point;
  mpq_class objective_value;

  bool feasible() const noexcept { return status == SolveStatus::Feasible; }
};

/// Exact rational counterpart of solve() (no extra equality); epsilon is
/// taken from sys exactly.
ExactOutcome solve_exact(const ConstraintSystem& sys, std::span<const mpq_class> objective, Sense sense);

/// A strictly positive integer weight vector that satisfies every constraint
/// of a system exactly, together with the floating-point optimum of the
/// perturbed program it was rounded from.
struct FeasibleWeight {
  std::vector<std::int64_t> weights;
  std::vector<double> point;
  bool used_exact_fallback = false;
};

/// Decides feasibility of the strict system {a.y > 0} u {y > 0} through the
/// perturbed program (minimize sum y). Floating-point solutions are scaled by
/// 10^k (k = 3, 6, 12), rounded, divided by their gcd and verified exactly;
/// if every attempt fails the exact rational simplex is used. Infeasible
/// verdicts of the floating-point solver are confirmed exactly as well.
std::optional<FeasibleWeight> feasible_weight(const ConstraintSystem& sys);

}  // namespace conegb
