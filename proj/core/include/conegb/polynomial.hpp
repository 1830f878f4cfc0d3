#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conegb/ordering.hpp"
#include "conegb/term.hpp"

namespace conegb {

using Coefficient = mpq_class;

struct Monomial {
  Term term;
  Coefficient coeff;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.term == b.term && a.coeff == b.coeff;
  }
};

/// A multivariate polynomial over Q with a map-like representation: no zero
/// coefficients and no repeated terms. Monomials are stored in decreasing
/// lexicographic exponent order, which makes equality structural and is
/// independent of any term ordering.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  /// Combines repeated terms and drops zeros.
  Polynomial(std::size_t nvars, std::vector<Monomial> monomials);

  static Polynomial constant(std::size_t nvars, const Coefficient& c);
  static Polynomial monomial(const Term& t, const Coefficient& c);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Monomial> monomials() const noexcept { return terms_; }
  std::vector<Term> support() const;
  Coefficient coefficient(const Term& t) const;
  bool contains(const Term& t) const;
  /// Maximal total degree of a term; -1 for the zero polynomial.
  std::int64_t total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Coefficient& c) const;
  Polynomial times(const Term& t, const Coefficient& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  struct Sorted {};
  Polynomial(Sorted, std::size_t nvars, std::vector<Monomial> sorted)
      : terms_(std::move(sorted)), nvars_(nvars) {}
  void check_same_ring(const Polynomial& other) const;

  std::vector<Monomial> terms_;
  std::size_t nvars_ = 0;
};

/// A polynomial with its sugar: the degree its homogenization would have.
struct TrackedPolynomial {
  Polynomial poly;
  std::int64_t sugar = 0;
};

/// Leading monomial under `o`; throws std::invalid_argument for the zero polynomial.
Monomial leading_monomial(const TermOrdering& o, const Polynomial& p);
inline std::pair<Term, Coefficient> leading_term(const TermOrdering& o, const Polynomial& p) {
  auto m = leading_monomial(o, p);
  return {std::move(m.term), std::move(m.coeff)};
}

/// lc(g) * lcm/lt(f) * f - lc(f) * lcm/lt(g) * g, with spoly(p, 0) = spoly(0, p) = p.
/// Throws std::invalid_argument when both inputs are zero.
Polynomial s_polynomial(const TermOrdering& o, const Polynomial& f, const Polynomial& g);

enum class ReductionMode { Full, LeadOnly };

/// A remainder of p modulo G. In Full mode no lt(g) divides any term of the
/// result; in LeadOnly mode only the leading term is guaranteed irreducible.
/// Throws std::invalid_argument if some g is zero.
Polynomial reduce(const TermOrdering& o, const Polynomial& p, std::span<const Polynomial> basis,
                  ReductionMode mode = ReductionMode::Full);

/// Divides by the leading coefficient; the zero polynomial is returned unchanged.
Polynomial make_monic(const TermOrdering& o, const Polynomial& p);

/// Appends a homogenizing variable (the new last, smallest variable) and pads
/// every monomial to the total degree of p.
Polynomial homogenize(const Polynomial& p);

std::string to_string(const Polynomial& p, std::span<const std::string> names = {});
std::string to_string(const Term& t, std::span<const std::string> names = {});
/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace conegb
