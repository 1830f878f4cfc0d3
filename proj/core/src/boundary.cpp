#include "conegb/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "conegb/simplex.hpp"

namespace conegb {

namespace {

// Relative slack for psi.(u - t) > 0; values this close to zero are treated
// as ties, which the filter discards.
constexpr double kPositiveTol = 1e-9;

bool near(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::fabs(a[k] - b[k]) > tol) return false;
  return true;
}

}  // namespace

BoundaryVectorSet BoundaryVectorSet::standard_basis(std::size_t nvars) {
  BoundaryVectorSet s;
  s.level = 1;
  for (std::size_t k = 0; k < nvars; ++k) {
    std::vector<double> e(nvars, 0.0);
    e[k] = 1.0;
    s.vectors.push_back(std::move(e));
  }
  return s;
}

BoundaryVectorSet compute_boundary_vectors(const ConstraintSystem& sys, std::span<const double> tau,
                                           const BoundaryOptions& options) {
  const std::size_t n = sys.nvars();
  if (tau.size() != n) throw std::invalid_argument("compute_boundary_vectors: tau dimension mismatch");
  BoundaryVectorSet out;
  out.level = options.level.value_or(1.0 + std::accumulate(tau.begin(), tau.end(), 0.0));
  LinearEquality hyperplane{std::vector<double>(n, 1.0), out.level};
  std::vector<double> objective(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    objective[k] = 1.0;
    for (Sense sense : {Sense::Maximize, Sense::Minimize}) {
      auto res = solve(sys, objective, sense, hyperplane, options.epsilon);
      if (!res.feasible())
        throw std::runtime_error("compute_boundary_vectors: cross-section is empty or unbounded");
      const bool seen = std::any_of(out.vectors.begin(), out.vectors.end(), [&](const auto& v) {
        return near(v, res.point, options.dedup_tolerance);
      });
      if (!seen) out.vectors.push_back(std::move(res.point));
    }
    objective[k] = 0.0;
  }
  return out;
}

std::vector<Term> filter_by_boundary_vectors(const BoundaryVectorSet& psi, const Term& t,
                                             std::span<const Term> others) {
  std::vector<Term> kept{t};
  for (const auto& u : others) {
    if (u == t) continue;
    const auto diff = u.difference(t);
    const bool somewhere_larger = std::any_of(psi.vectors.begin(), psi.vectors.end(), [&](const auto& v) {
      double dot = 0;
      double scale = 0;
      for (std::size_t k = 0; k < diff.size(); ++k) {
        dot += v[k] * static_cast<double>(diff[k]);
        scale += std::fabs(v[k] * static_cast<double>(diff[k]));
      }
      return dot > kPositiveTol * std::max(1.0, scale);
    });
    if (somewhere_larger) kept.push_back(u);
  }
  return kept;
}

}  // namespace conegb
