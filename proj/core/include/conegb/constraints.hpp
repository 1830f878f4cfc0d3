#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "conegb/polynomial.hpp"
#include "conegb/term.hpp"

namespace conegb {

/// An integer linear form a with the meaning a.y > 0 (or a.y >= epsilon in
/// the perturbed program). Always stored in canonical form: entries divided
/// by the gcd of their absolute values, never the zero vector.
class Constraint {
 public:
  /// Canonicalizes; throws std::invalid_argument for the zero vector.
  explicit Constraint(std::vector<std::int64_t> coeffs);

  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](std::size_t k) const noexcept { return coeffs_[k]; }

  /// All entries >= 0: implied by positivity of the weights.
  bool implied_by_positivity() const noexcept;
  /// Exact value a.w (128-bit accumulation).
  __int128 evaluate(std::span<const std::int64_t> w) const;
  double evaluate(std::span<const double> y) const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
  friend std::strong_ordering operator<=>(const Constraint& a, const Constraint& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  std::vector<std::int64_t> coeffs_;
};

Constraint canonicalize(std::vector<std::int64_t> coeffs);

/// A set of canonical constraints; std::set gives deduplication and cheap
/// inclusion tests.
using ConstraintSet = std::set<Constraint>;

/// The constraints {y.(t - u) > 0 : u in supp(r), u != t} in canonical form,
/// with those implied by positivity (u properly dividing t) dropped.
/// Throws std::invalid_argument when t is not in supp(r).
ConstraintSet constraints_for(const Term& t, const Polynomial& r);
/// Same for an explicit list of competing terms (t itself is skipped).
ConstraintSet constraints_for(const Term& t, std::span<const Term> others);

/// An ordered, deduplicated system of constraints in n unknowns together with
/// the perturbation epsilon of the modified program (a.y >= eps, y_k >= eps).
class ConstraintSystem {
 public:
  ConstraintSystem() = default;
  explicit ConstraintSystem(std::size_t nvars, double epsilon = 1.0);

  std::size_t nvars() const noexcept { return nvars_; }
  double epsilon() const noexcept { return epsilon_; }
  void set_epsilon(double eps);
  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  /// Returns false when the constraint was already present.
  bool add(const Constraint& c);
  void add(const ConstraintSet& cs);
  bool contains(const Constraint& c) const { return members_.count(c) != 0; }

  /// Constraints in insertion order.
  std::span<const Constraint> constraints() const noexcept { return order_; }
  const ConstraintSet& as_set() const noexcept { return members_; }

  /// Exact check that w > 0 componentwise and every a.w > 0.
  bool strictly_satisfied_by(std::span<const std::int64_t> w) const;

 private:
  std::size_t nvars_ = 0;
  double epsilon_ = 1.0;
  std::vector<Constraint> order_;
  ConstraintSet members_;
};

}  // namespace conegb
