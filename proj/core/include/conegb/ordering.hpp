#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conegb/term.hpp"

namespace conegb {

enum class Tiebreak { Grevlex, Lex, Matrix };

/// An admissible term ordering: a strictly positive weight row followed by a
/// tie-break.
///
/// Terms are compared first by weight-degree w.u; equal weights fall through
/// to the tie-break. Grevlex breaks ties by reverse lexicographic comparison
/// (smaller exponent in the last differing variable wins), lex by the first
/// differing variable (x1 > x2 > ... > xn), and Matrix by the extra integer
/// rows compared lexicographically and then grevlex, which keeps the order
/// total even for rank-deficient rows.
///
/// The lex ordering has no weight row at all; weight() is empty for it.
class TermOrdering {
 public:
  TermOrdering() = default;

  static TermOrdering grevlex(std::size_t nvars);
  static TermOrdering lex(std::size_t nvars);
  static TermOrdering weighted(std::vector<std::int64_t> weight, Tiebreak tiebreak = Tiebreak::Grevlex);
  /// First row is the weight vector (must be strictly positive); remaining
  /// rows form the matrix tie-break.
  static TermOrdering matrix(std::vector<std::vector<std::int64_t>> rows);

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const std::int64_t> weight() const noexcept { return weight_; }
  bool has_weight() const noexcept { return !weight_.empty(); }
  Tiebreak tiebreak() const noexcept { return tiebreak_; }
  const std::vector<std::vector<std::int64_t>>& tiebreak_rows() const noexcept { return rows_; }

  /// w.t, or the standard degree when the ordering carries no weight.
  std::int64_t weighted_degree(const Term& t) const;

  /// Throws std::invalid_argument on variable-count mismatch.
  std::strong_ordering compare(const Term& u, const Term& v) const;
  bool less(const Term& u, const Term& v) const { return compare(u, v) < 0; }
  bool greater(const Term& u, const Term& v) const { return compare(u, v) > 0; }

  std::string describe() const;

  friend bool operator==(const TermOrdering&, const TermOrdering&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<std::int64_t> weight_;
  Tiebreak tiebreak_ = Tiebreak::Grevlex;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Free-function form of TermOrdering::compare.
inline std::strong_ordering compare_terms(const TermOrdering& o, const Term& u, const Term& v) {
  return o.compare(u, v);
}

/// Comparator sorting terms in decreasing order under an ordering.
struct DescendingBy {
  const TermOrdering* order;
  bool operator()(const Term& a, const Term& b) const { return order->compare(a, b) > 0; }
};

}  // namespace conegb
