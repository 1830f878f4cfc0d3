#include "conegb/constraints.hpp"

#include <numeric>
#include <stdexcept>

namespace conegb {

Constraint::Constraint(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  std::int64_t g = 0;
  for (auto a : coeffs_) g = std::gcd(g, a);
  if (g == 0) throw std::invalid_argument("Constraint: zero vector");
  if (g != 1)
    for (auto& a : coeffs_) a /= g;
}

bool Constraint::implied_by_positivity() const noexcept {
  for (auto a : coeffs_)
    if (a < 0) return false;
  return true;
}

__int128 Constraint::evaluate(std::span<const std::int64_t> w) const {
  if (w.size() != coeffs_.size()) throw std::invalid_argument("Constraint: dimension mismatch");
  __int128 s = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s += static_cast<__int128>(coeffs_[k]) * w[k];
  return s;
}

double Constraint::evaluate(std::span<const double> y) const {
  if (y.size() != coeffs_.size()) throw std::invalid_argument("Constraint: dimension mismatch");
  double s = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) s += static_cast<double>(coeffs_[k]) * y[k];
  return s;
}

Constraint canonicalize(std::vector<std::int64_t> coeffs) { return Constraint(std::move(coeffs)); }

ConstraintSet constraints_for(const Term& t, std::span<const Term> others) {
  ConstraintSet out;
  for (const auto& u : others) {
    if (u == t) continue;
    Constraint c(t.difference(u));
    if (!c.implied_by_positivity()) out.insert(std::move(c));
  }
  return out;
}

ConstraintSet constraints_for(const Term& t, const Polynomial& r) {
  if (!r.contains(t)) throw std::invalid_argument("constraints_for: term not in support");
  const auto supp = r.support();
  return constraints_for(t, std::span<const Term>(supp));
}

ConstraintSystem::ConstraintSystem(std::size_t nvars, double epsilon) : nvars_(nvars) {
  set_epsilon(epsilon);
}

void ConstraintSystem::set_epsilon(double eps) {
  if (!(eps >= 0)) throw std::invalid_argument("ConstraintSystem: epsilon must be >= 0");
  epsilon_ = eps;
}

bool ConstraintSystem::add(const Constraint& c) {
  if (c.size() != nvars_) throw std::invalid_argument("ConstraintSystem: dimension mismatch");
  if (!members_.insert(c).second) return false;
  order_.push_back(c);
  return true;
}

void ConstraintSystem::add(const ConstraintSet& cs) {
  for (const auto& c : cs) add(c);
}

bool ConstraintSystem::strictly_satisfied_by(std::span<const std::int64_t> w) const {
  if (w.size() != nvars_) return false;
  for (auto x : w)
    if (x <= 0) return false;
  for (const auto& c : order_)
    if (c.evaluate(w) <= 0) return false;
  return true;
}

}  // namespace conegb
