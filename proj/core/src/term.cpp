#include "conegb/term.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace conegb {

Term::Term(std::size_t nvars) : exps_(nvars, 0) {}

Term::Term(std::vector<std::int32_t> exponents) : exps_(std::move(exponents)) {
  for (auto e : exps_) {
    if (e < 0) throw std::invalid_argument("Term: negative exponent");
    degree_ += e;
  }
}

Term::Term(std::initializer_list<std::int32_t> exponents)
    : Term(std::vector<std::int32_t>(exponents)) {}

Term Term::variable(std::size_t nvars, std::size_t index, std::int32_t power) {
  if (index >= nvars) throw std::out_of_range("Term::variable: index out of range");
  std::vector<std::int32_t> e(nvars, 0);
  e[index] = power;
  return Term(std::move(e));
}

void Term::check_same_size(const Term& other) const {
  if (exps_.size() != other.exps_.size())
    throw std::invalid_argument("Term: variable count mismatch");
}

bool Term::divides(const Term& other) const {
  check_same_size(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

bool Term::coprime(const Term& other) const {
  check_same_size(other);
  for (std::size_t k = 0; k < exps_.size(); ++k)
    if (exps_[k] != 0 && other.exps_[k] != 0) return false;
  return true;
}

Term Term::operator*(const Term& other) const {
  check_same_size(other);
  Term r(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += other.exps_[k];
  r.degree_ += other.degree_;
  return r;
}

Term Term::operator/(const Term& divisor) const {
  if (!divisor.divides(*this)) throw std::domain_error("Term: inexact division");
  Term r(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= divisor.exps_[k];
  r.degree_ -= divisor.degree_;
  return r;
}

Term Term::lcm(const Term& other) const {
  check_same_size(other);
  Term r(*this);
  r.degree_ = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    r.exps_[k] = std::max(exps_[k], other.exps_[k]);
    r.degree_ += r.exps_[k];
  }
  return r;
}

Term Term::gcd(const Term& other) const {
  check_same_size(other);
  Term r(*this);
  r.degree_ = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    r.exps_[k] = std::min(exps_[k], other.exps_[k]);
    r.degree_ += r.exps_[k];
  }
  return r;
}

std::vector<std::int64_t> Term::difference(const Term& other) const {
  check_same_size(other);
  std::vector<std::int64_t> d(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k)
    d[k] = std::int64_t{exps_[k]} - std::int64_t{other.exps_[k]};
  return d;
}

Term Term::extended(std::int32_t last_exponent) const {
  auto e = exps_;
  e.push_back(last_exponent);
  return Term(std::move(e));
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : t.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace conegb
