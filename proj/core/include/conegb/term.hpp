#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace conegb {

/// A power product x1^e1 * ... * xn^en, identified with its exponent vector.
///
/// Terms of different length never compare equal; arithmetic between terms
/// of different length throws std::invalid_argument.
class Term {
 public:
  Term() = default;
  explicit Term(std::size_t nvars);
  explicit Term(std::vector<std::int32_t> exponents);
  Term(std::initializer_list<std::int32_t> exponents);

  /// The term 1 in n variables.
  static Term one(std::size_t nvars) { return Term(nvars); }
  /// The variable x_{index+1} in n variables.
  static Term variable(std::size_t nvars, std::size_t index, std::int32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::int32_t operator[](std::size_t k) const noexcept { return exps_[k]; }
  std::span<const std::int32_t> exponents() const noexcept { return exps_; }
  std::int64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// True if *this divides other.
  bool divides(const Term& other) const;
  bool properly_divides(const Term& other) const { return divides(other) && *this != other; }
  bool coprime(const Term& other) const;

  Term operator*(const Term& other) const;
  /// Exact quotient; throws std::domain_error when `divisor` does not divide *this.
  Term operator/(const Term& divisor) const;
  Term lcm(const Term& other) const;
  Term gcd(const Term& other) const;

  /// Exponent-vector difference this - other, the direction used in cone constraints.
  std::vector<std::int64_t> difference(const Term& other) const;

  /// Appends a variable with the given exponent (used by homogenization).
  Term extended(std::int32_t last_exponent) const;

  friend bool operator==(const Term& a, const Term& b) noexcept { return a.exps_ == b.exps_; }
  /// Lexicographic comparison of exponent vectors; a storage order, not a term ordering.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    return a.exps_ <=> b.exps_;
  }

 private:
  void check_same_size(const Term& other) const;

  std::vector<std::int32_t> exps_;
  std::int64_t degree_ = 0;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

}  // namespace conegb
