#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "conegb/ordering.hpp"
#include "conegb/polynomial.hpp"

namespace conegb {

/// Monomials sorted in decreasing order under one particular term ordering.
/// This is the working representation of the reduction kernel; it is only
/// meaningful together with the ordering that sorted it.
struct OrderedPolynomial {
  std::vector<Monomial> terms;
  std::int64_t sugar = 0;

  bool is_zero() const noexcept { return terms.empty(); }
  const Monomial& lead() const { return terms.front(); }
};

OrderedPolynomial order_by(const TermOrdering& o, const Polynomial& p, std::int64_t sugar = 0);
/// Re-sorts in place after the ordering changed.
void reorder(const TermOrdering& o, OrderedPolynomial& p);
Polynomial to_polynomial(std::size_t nvars, const OrderedPolynomial& p);

enum class SugarDegree { Standard, Weighted };

/// Reduces `p` modulo the nonzero, already ordered `basis` elements selected
/// by `active` (all of them when `active` is empty). Sugar is propagated:
/// subtracting c*t*g raises the sugar to at least deg(t) + sugar(g).
OrderedPolynomial reduce_ordered(const TermOrdering& o, OrderedPolynomial p,
                                 std::span<const OrderedPolynomial> basis,
                                 ReductionMode mode = ReductionMode::Full,
                                 SugarDegree sugar_degree = SugarDegree::Standard,
                                 std::span<const char> active = {});

/// S-polynomial of two ordered, nonzero polynomials with sugar
/// max(sugar(f) + deg(lcm/lt f), sugar(g) + deg(lcm/lt g)).
OrderedPolynomial s_polynomial_ordered(const TermOrdering& o, const OrderedPolynomial& f,
                                       const OrderedPolynomial& g,
                                       SugarDegree sugar_degree = SugarDegree::Standard);

void make_monic(OrderedPolynomial& p);

}  // namespace conegb
