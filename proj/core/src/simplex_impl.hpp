#pragma once

// Dense two-phase primal simplex, shared by the floating-point solver and the
// exact rational fallback.

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace conegb::detail {

template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr double pivot_tol = 1e-9;
  static constexpr double cost_tol = 1e-9;
  static constexpr double feas_tol = 1e-7;
  static bool positive(double x, double tol) { return x > tol; }
  static bool negative(double x, double tol) { return x < -tol; }
  static double abs(double x) { return std::fabs(x); }
};

template <>
struct ScalarTraits<mpq_class> {
  static inline const mpq_class pivot_tol{0};
  static inline const mpq_class cost_tol{0};
  static inline const mpq_class feas_tol{0};
  static bool positive(const mpq_class& x, const mpq_class&) { return sgn(x) > 0; }
  static bool negative(const mpq_class& x, const mpq_class&) { return sgn(x) < 0; }
  static mpq_class abs(const mpq_class& x) { return ::abs(x); }
};

enum class RowKind { GreaterEqual, Equal };

template <class Scalar>
struct LinearRow {
  std::vector<Scalar> coeffs;
  RowKind kind;
  Scalar rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Scalar>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Scalar> x;
  Scalar objective{};
};

/// Minimizes cost.x subject to rows and x >= 0.
template <class Scalar>
class TwoPhaseSimplex {
  using T = ScalarTraits<Scalar>;

 public:
  TwoPhaseSimplex(std::size_t nvars, const std::vector<LinearRow<Scalar>>& rows) : n_(nvars) {
    m_ = rows.size();
    std::size_t nslack = 0;
    std::size_t nart = 0;
    for (const auto& r : rows) {
      if (r.kind == RowKind::GreaterEqual) ++nslack;
      const bool flip = T::negative(r.rhs, Scalar(0));
      if (r.kind == RowKind::Equal || !flip) ++nart;
    }
    slack_begin_ = n_;
    art_begin_ = n_ + nslack;
    ncols_ = n_ + nslack + nart;
    width_ = ncols_ + 1;
    tab_.assign(m_ * width_, Scalar(0));
    basis_.assign(m_, 0);
    std::size_t s = slack_begin_;
    std::size_t a = art_begin_;
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& r = rows[i];
      const bool flip = T::negative(r.rhs, Scalar(0));
      const Scalar sign = flip ? Scalar(-1) : Scalar(1);
      for (std::size_t k = 0; k < n_; ++k) at(i, k) = sign * r.coeffs[k];
      rhs(i) = sign * r.rhs;
      if (r.kind == RowKind::GreaterEqual) {
        at(i, s) = -sign;
        if (flip) basis_[i] = s;
        ++s;
      }
      if (r.kind == RowKind::Equal || !flip) {
        at(i, a) = Scalar(1);
        basis_[i] = a;
        ++a;
      }
    }
    allowed_.assign(ncols_, 1);
  }

  LpResult<Scalar> minimize(const std::vector<Scalar>& cost) {
    LpResult<Scalar> result;
    // Phase 1: minimize the sum of artificials.
    if (art_begin_ < ncols_) {
      std::vector<Scalar> phase1(ncols_, Scalar(0));
      for (std::size_t j = art_begin_; j < ncols_; ++j) phase1[j] = Scalar(1);
      if (run(phase1) == LpStatus::Unbounded) return result;  // cannot happen; bounded below by 0
      Scalar infeas(0);
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] >= art_begin_) infeas += rhs(i);
      if (T::positive(infeas, T::feas_tol)) return result;
      drive_out_artificials();
      for (std::size_t j = art_begin_; j < ncols_; ++j) allowed_[j] = 0;
    }
    std::vector<Scalar> full(ncols_, Scalar(0));
    for (std::size_t k = 0; k < n_; ++k) full[k] = cost[k];
    if (run(full) == LpStatus::Unbounded) {
      result.status = LpStatus::Unbounded;
      return result;
    }
    result.status = LpStatus::Optimal;
    result.x.assign(n_, Scalar(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) result.x[basis_[i]] = rhs(i);
    result.objective = Scalar(0);
    for (std::size_t k = 0; k < n_; ++k) result.objective += cost[k] * result.x[k];
    return result;
  }

 private:
  Scalar& at(std::size_t i, std::size_t j) { return tab_[i * width_ + j]; }
  Scalar& rhs(std::size_t i) { return tab_[i * width_ + ncols_]; }

  void pivot(std::size_t row, std::size_t col) {
    const Scalar p = at(row, col);
    for (std::size_t j = 0; j < width_; ++j) at(row, j) /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const Scalar f = at(i, col);
      if (f == Scalar(0)) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (at(row, j) != Scalar(0)) at(i, j) -= f * at(row, j);
      }
    }
    basis_[row] = col;
  }

  // Reduced costs c_j - c_B B^-1 A_j, recomputed from scratch per iteration.
  void reduced_costs(const std::vector<Scalar>& cost, std::vector<Scalar>& out) {
    out.assign(ncols_, Scalar(0));
    for (std::size_t j = 0; j < ncols_; ++j) out[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Scalar& cb = cost[basis_[i]];
      if (cb == Scalar(0)) continue;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (at(i, j) != Scalar(0)) out[j] -= cb * at(i, j);
    }
  }

  LpStatus run(const std::vector<Scalar>& cost) {
    std::vector<Scalar> rc;
    std::size_t degenerate_streak = 0;
    constexpr std::size_t kBlandAfter = 50;
    const std::size_t max_iters = 50 * (m_ + ncols_) + 1000;
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
      reduced_costs(cost, rc);
      const bool bland = degenerate_streak >= kBlandAfter;
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < ncols_; ++j) {
        if (!allowed_[j] || !T::negative(rc[j], T::cost_tol)) continue;
        if (!enter) {
          enter = j;
          if (bland) break;
        } else if (rc[j] < rc[*enter]) {
          enter = j;
        }
      }
      if (!enter) return LpStatus::Optimal;
      std::optional<std::size_t> leave;
      Scalar best_ratio{};
      for (std::size_t i = 0; i < m_; ++i) {
        if (!T::positive(at(i, *enter), T::pivot_tol)) continue;
        Scalar ratio = rhs(i) / at(i, *enter);
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return LpStatus::Unbounded;
      if (T::positive(best_ratio, T::pivot_tol)) {
        degenerate_streak = 0;
      } else {
        ++degenerate_streak;
      }
      pivot(*leave, *enter);
      clamp_rhs();
    }
    // Iteration cap reached: treat as converged; callers verify the point.
    return LpStatus::Optimal;
  }

  void clamp_rhs() {
    if constexpr (std::is_same_v<Scalar, double>) {
      for (std::size_t i = 0; i < m_; ++i)
        if (rhs(i) < 0 && rhs(i) > -T::feas_tol) rhs(i) = 0;
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (T::positive(T::abs(at(i, j)), T::pivot_tol)) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        remove_row(i);
      }
    }
  }

  void remove_row(std::size_t row) {
    tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(row * width_),
               tab_.begin() + static_cast<std::ptrdiff_t>((row + 1) * width_));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --m_;
  }

  std::size_t n_;
  std::size_t m_ = 0;
  std::size_t slack_begin_ = 0;
  std::size_t art_begin_ = 0;
  std::size_t ncols_ = 0;
  std::size_t width_ = 0;
  std::vector<Scalar> tab_;
  std::vector<std::size_t> basis_;
  std::vector<char> allowed_;
};

}  // namespace conegb::detail
