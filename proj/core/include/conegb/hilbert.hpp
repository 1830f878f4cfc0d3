#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "conegb/term.hpp"

namespace conegb {

/// A monomial ideal kept as its minimal generating set.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  /// Minimalizes the given generators.
  MonomialIdeal(std::size_t nvars, std::span<const Term> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& generators() const noexcept { return gens_; }
  bool contains(const Term& t) const;
  /// Adds t, dropping generators it divides; no-op when t is already in the ideal.
  void add(const Term& t);
  MonomialIdeal with(const Term& t) const;

 private:
  std::size_t nvars_;
  std::vector<Term> gens_;
};

/// Integer polynomial in t, coefficient k at index k.
using IntPolynomial = std::vector<std::int64_t>;

/// Numerator N(t) of the Hilbert series sum_d dim(R/I)_d t^d = N(t) / (1-t)^n,
/// by pivot recursion on the variable occurring in the most generators.
IntPolynomial hilbert_numerator(const MonomialIdeal& ideal);

struct HilbertData {
  std::size_t nvars = 0;
  IntPolynomial numerator;          // over (1-t)^nvars
  IntPolynomial reduced_numerator;  // over (1-t)^dimension, all (1-t) factors cancelled
  std::int64_t dimension = 0;       // Krull dimension of R/I
  std::int64_t hp_degree = -1;      // degree of the Hilbert polynomial, -1 when R/I is finite
  std::vector<mpq_class> hp_coeffs; // Hilbert polynomial in d, coefficient k at index k
  std::int64_t regularity = 0;      // first degree from which H(d) = HP(d)

  /// dim(R/I)_d from the series.
  mpz_class series_coefficient(std::int64_t d) const;
  mpq_class hilbert_polynomial_at(std::int64_t d) const;
  mpq_class leading_hp_coefficient() const;
};

HilbertData hilbert_data(const MonomialIdeal& ideal);

enum class CandidateComparison { ABetter, BBetter, Tie };

/// Ranks two tentative Hilbert functions: lower Hilbert polynomial degree
/// wins, then the smaller leading coefficient, then the first smaller series
/// coefficient from degree 0 upward. Tie only for identical series.
/// Throws std::invalid_argument when the ambient dimensions differ.
CandidateComparison compare_candidates(const HilbertData& a, const HilbertData& b);

/// Brute-force count of degree-d terms outside the ideal.
std::int64_t standard_monomial_count(const MonomialIdeal& ideal, std::int64_t d);

}  // namespace conegb
