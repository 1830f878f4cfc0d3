#pragma once

#include <optional>
#include <span>
#include <vector>

#include "conegb/constraints.hpp"
#include "conegb/term.hpp"

namespace conegb {

/// At most 2n floating-point vectors approximating the extreme points of the
/// cone's cross-section with the hyperplane sum(y) = level.
struct BoundaryVectorSet {
  std::vector<std::vector<double>> vectors;
  double level = 0;

  /// The standard basis vectors, the cross-section corners of the whole
  /// positive orthant (level 1).
  static BoundaryVectorSet standard_basis(std::size_t nvars);

  std::size_t size() const noexcept { return vectors.size(); }
};

struct BoundaryOptions {
  /// Hyperplane level; defaults to 1 + sum(tau).
  std::optional<double> level;
  /// Overrides the system's epsilon; 0 computes on the closure of the cone.
  std::optional<double> epsilon;
  /// L-infinity distance under which two vectors count as the same.
  double dedup_tolerance = 1e-7;
};

/// For k = 1..n, the optima of max y_k and min y_k over the system intersected
/// with sum(y) = level, deduplicated. Throws std::runtime_error when a solve
/// fails, which cannot happen for a feasible system and point tau.
BoundaryVectorSet compute_boundary_vectors(const ConstraintSystem& sys, std::span<const double> tau,
                                           const BoundaryOptions& options = {});

/// {t} together with every u in `others` for which some psi in the set gives
/// psi.(u - t) > 0.
std::vector<Term> filter_by_boundary_vectors(const BoundaryVectorSet& psi, const Term& t,
                                             std::span<const Term> others);

}  // namespace conegb
