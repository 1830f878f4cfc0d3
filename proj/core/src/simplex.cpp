#include "conegb/simplex.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "simplex_impl.hpp"

namespace conegb {

namespace {

using detail::LinearRow;
using detail::LpStatus;
using detail::RowKind;

// Substituting y = z + eps turns {a.y >= eps, y >= eps} into
// {a.z >= eps * (1 - sum a), z >= 0}.
template <class Scalar>
std::vector<LinearRow<Scalar>> shifted_rows(const ConstraintSystem& sys, const Scalar& eps) {
  std::vector<LinearRow<Scalar>> rows;
  rows.reserve(sys.size() + 1);
  for (const auto& c : sys.constraints()) {
    LinearRow<Scalar> row;
    row.kind = RowKind::GreaterEqual;
    row.coeffs.resize(sys.nvars());
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < sys.nvars(); ++k) {
      row.coeffs[k] = Scalar(static_cast<double>(c[k]));
      sum += c[k];
    }
    row.rhs = eps * Scalar(static_cast<double>(1 - sum));
    rows.push_back(std::move(row));
  }
  return rows;
}

SolveStatus to_status(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return SolveStatus::Feasible;
    case LpStatus::Infeasible: return SolveStatus::Infeasible;
    case LpStatus::Unbounded: return SolveStatus::Unbounded;
  }
  return SolveStatus::Infeasible;
}

std::int64_t gcd_all(const std::vector<std::int64_t>& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

std::optional<std::vector<std::int64_t>> round_scaled(const std::vector<double>& point, int digits) {
  const double scale = std::pow(10.0, digits);
  std::vector<std::int64_t> w(point.size());
  for (std::size_t k = 0; k < point.size(); ++k) {
    const double v = std::round(point[k] * scale);
    if (!(v >= 1.0) || v > 9.0e15) return std::nullopt;
    w[k] = static_cast<std::int64_t>(v);
  }
  const auto g = gcd_all(w);
  if (g > 1)
    for (auto& x : w) x /= g;
  return w;
}

std::optional<std::vector<std::int64_t>> integer_from_rational(const std::vector<mpq_class>& point) {
  mpz_class denom_lcm = 1;
  for (const auto& q : point) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> scaled;
  mpz_class g = 0;
  for (const auto& q : point) {
    mpz_class v = q.get_num() * (denom_lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  std::vector<std::int64_t> w;
  for (auto& v : scaled) {
    if (g > 1) v /= g;
    if (!v.fits_slong_p() || v <= 0) return std::nullopt;
    w.push_back(v.get_si());
  }
  return w;
}

// Rational p/q with q <= max_den closest to x by continued fractions.
std::pair<mpz_class, mpz_class> approximate(double x, long max_den) {
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(r);
    const mpz_class ai(a);
    mpz_class p2 = ai * p1 + p0;
    mpz_class q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = r - a;
    if (frac < 1e-12) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return {mpz_class(static_cast<long>(std::round(x))), mpz_class(1)};
  return {p1, q1};
}

// Exact check of a Farkas-type certificate: lambda >= 0, lambda != 0 and
// sum_j lambda_j a_j <= 0 componentwise. Then lambda.(A y) > 0 and <= 0 for
// any strict solution y > 0, so none exists.
bool certifies_infeasible(const ConstraintSystem& sys, const std::vector<mpz_class>& lambda) {
  bool nonzero = false;
  for (const auto& l : lambda) {
    if (sgn(l) < 0) return false;
    nonzero = nonzero || sgn(l) > 0;
  }
  if (!nonzero) return false;
  const auto cons = sys.constraints();
  for (std::size_t k = 0; k < sys.nvars(); ++k) {
    mpz_class sum = 0;
    for (std::size_t j = 0; j < cons.size(); ++j)
      if (sgn(lambda[j]) != 0 && cons[j][k] != 0) sum += lambda[j] * mpz_class(static_cast<long>(cons[j][k]));
    if (sgn(sum) > 0) return false;
  }
  return true;
}

// Looks for the certificate above with a floating-point solve and exact
// verification of rounded multipliers.
bool proven_infeasible(const ConstraintSystem& sys) {
  const auto cons = sys.constraints();
  const std::size_t m = cons.size();
  const std::size_t n = sys.nvars();
  std::vector<LinearRow<double>> rows;
  for (std::size_t k = 0; k < n; ++k) {
    LinearRow<double> row;
    row.kind = RowKind::GreaterEqual;
    row.coeffs.resize(m);
    for (std::size_t j = 0; j < m; ++j) row.coeffs[j] = -static_cast<double>(cons[j][k]);
    row.rhs = 0;
    rows.push_back(std::move(row));
  }
  rows.push_back(LinearRow<double>{std::vector<double>(m, 1.0), RowKind::Equal, 1.0});
  detail::TwoPhaseSimplex<double> lp(m, rows);
  const auto res = lp.minimize(std::vector<double>(m, 0.0));
  if (res.status != LpStatus::Optimal) return false;
  double top = 0;
  for (double l : res.x) top = std::max(top, l);
  if (!(top > 0)) return false;
  for (long max_den : {100L, 10000L, 1000000L}) {
    std::vector<std::pair<mpz_class, mpz_class>> parts;
    mpz_class den_lcm = 1;
    for (double l : res.x) {
      auto pq = approximate(std::max(0.0, l / top), max_den);
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), pq.second.get_mpz_t());
      parts.push_back(std::move(pq));
    }
    std::vector<mpz_class> lambda;
    for (auto& [num, den] : parts) lambda.push_back(num * (den_lcm / den));
    if (certifies_infeasible(sys, lambda)) return true;
  }
  return false;
}

}  // namespace

SimplexOutcome solve(const ConstraintSystem& sys, std::span<const double> objective, Sense sense,
                     const std::optional<LinearEquality>& extra_equality, std::optional<double> epsilon) {
  const std::size_t n = sys.nvars();
  if (objective.size() != n) throw std::invalid_argument("solve: objective dimension mismatch");
  const double eps = epsilon.value_or(sys.epsilon());
  if (!(eps >= 0)) throw std::invalid_argument("solve: epsilon must be >= 0");
  auto rows = shifted_rows<double>(sys, eps);
  if (extra_equality) {
    if (extra_equality->coeffs.size() != n) throw std::invalid_argument("solve: equality dimension mismatch");
    LinearRow<double> row;
    row.kind = RowKind::Equal;
    row.coeffs = extra_equality->coeffs;
    double shift = 0;
    for (auto a : row.coeffs) shift += a * eps;
    row.rhs = extra_equality->rhs - shift;
    rows.push_back(std::move(row));
  }
  std::vector<double> cost(objective.begin(), objective.end());
  if (sense == Sense::Maximize)
    for (auto& c : cost) c = -c;
  detail::TwoPhaseSimplex<double> lp(n, rows);
  auto res = lp.minimize(cost);
  SimplexOutcome out;
  out.status = to_status(res.status);
  if (out.feasible()) {
    out.point = res.x;
    for (auto& y : out.point) y += eps;
    out.objective_value = 0;
    for (std::size_t k = 0; k < n; ++k) out.objective_value += objective[k] * out.point[k];
  }
  return out;
}

ExactOutcome solve_exact(const ConstraintSystem& sys, std::span<const mpq_class> objective, Sense sense) {
  const std::size_t n = sys.nvars();
  if (objective.size() != n) throw std::invalid_argument("solve_exact: objective dimension mismatch");
  const mpq_class eps(sys.epsilon());
  auto rows = shifted_rows<mpq_class>(sys, eps);
  std::vector<mpq_class> cost(objective.begin(), objective.end());
  if (sense == Sense::Maximize)
    for (auto& c : cost) c = -c;
  detail::TwoPhaseSimplex<mpq_class> lp(n, rows);
  auto res = lp.minimize(cost);
  ExactOutcome out;
  out.status = to_status(res.status);
  if (out.feasible()) {
    out.point = res.x;
    for (auto& y : out.point) y += eps;
    out.objective_value = 0;
    for (std::size_t k = 0; k < n; ++k) out.objective_value += objective[k] * out.point[k];
  }
  return out;
}

std::optional<FeasibleWeight> feasible_weight(const ConstraintSystem& sys) {
  const std::size_t n = sys.nvars();
  if (sys.epsilon() <= 0) throw std::invalid_argument("feasible_weight: epsilon must be positive");
  if (sys.empty()) {
    FeasibleWeight fw;
    fw.weights.assign(n, 1);
    fw.point.assign(n, sys.epsilon());
    return fw;
  }
  const std::vector<double> ones(n, 1.0);
  const auto outcome = solve(sys, ones, Sense::Minimize);
  if (outcome.feasible()) {
    for (int digits : {3, 6, 12}) {
      auto w = round_scaled(outcome.point, digits);
      if (w && sys.strictly_satisfied_by(*w)) return FeasibleWeight{std::move(*w), outcome.point, false};
    }
  }
  if (!outcome.feasible() && proven_infeasible(sys)) return std::nullopt;
  const std::vector<mpq_class> exact_ones(n, mpq_class(1));
  const auto exact = solve_exact(sys, exact_ones, Sense::Minimize);
  if (!exact.feasible()) return std::nullopt;
  auto w = integer_from_rational(exact.point);
  if (!w || !sys.strictly_satisfied_by(*w))
    throw std::runtime_error("feasible_weight: exact solution failed verification");
  FeasibleWeight fw;
  fw.weights = std::move(*w);
  for (const auto& q : exact.point) fw.point.push_back(q.get_d());
  fw.used_exact_fallback = true;
  return fw;
}

}  // namespace conegb
