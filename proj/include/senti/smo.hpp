#pragma once

// Soft-margin linear SVM dual solved by sequential minimal optimization.
//
//   maximize   sum_i a_i - 1/2 sum_ij a_i a_j y_i y_j <x_i, x_j>
//   subject to 0 <= a_i <= C,  sum_i a_i y_i = 0
//
// The solver is deterministic. With F_i = w.x_i - y_i, optimality means
// max F over the "low" set <= min F over the "up" set (up to 2 tol), where
//   up  = {y = +1, a < C} u {y = -1, a > 0}
//   low = {y = +1, a > 0} u {y = -1, a < C}.
// Sweeps visit first-choice points in index order and step on those that
// violate this by more than 2 tol; the second choice is the extreme point of
// the opposite set (lowest index on ties), falling back to every other point
// in cyclic order starting after i. The bias is fitted once at the end, so
// no running bias can stall the sweep.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include <Eigen/Dense>

namespace senti {

template <typename Scalar>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct SmoParams {
  Scalar C = Scalar(1);
  Scalar tol = Scalar(1e-3);
  std::int64_t max_passes = 10;
  // Hard cap on pair-update attempts; empty means 10 * n * 1000.
  std::optional<std::int64_t> max_iters;

  std::int64_t resolved_max_iters(Eigen::Index n) const {
    return max_iters ? *max_iters : std::int64_t{10} * std::int64_t(n) * 1000;
  }
};

template <typename Scalar>
struct SmoResult {
  Vector<Scalar> alpha;
  Vector<Scalar> w;
  Scalar b = 0;
  std::int64_t iterations = 0;
  std::int64_t updates = 0;
  bool hit_iteration_cap = false;
  // Largest KKT violation, measured in units of y_i f(x_i), at the returned (w, b).
  Scalar max_kkt_violation = 0;
};

/// sum(alpha) - 1/2 |sum_i alpha_i y_i x_i|^2
template <typename Scalar>
Scalar dual_objective(const RowMatrix<Scalar>& X, const Vector<Scalar>& y,
                      const Vector<Scalar>& alpha) {
  const Vector<Scalar> w = X.transpose() * alpha.cwiseProduct(y);
  return alpha.sum() - Scalar(0.5) * w.squaredNorm();
}

/// Largest KKT violation of (alpha, w, b), in units of y_i f(x_i):
///   a_i = 0     needs y_i f(x_i) >= 1
///   0 < a_i < C needs y_i f(x_i) == 1
///   a_i = C     needs y_i f(x_i) <= 1
template <typename Scalar>
Scalar kkt_violation(const RowMatrix<Scalar>& X, const Vector<Scalar>& y,
                     const Vector<Scalar>& alpha, const Vector<Scalar>& w, Scalar b, Scalar C) {
  Scalar worst = 0;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const Scalar margin = y[i] * (X.row(i).dot(w) + b);
    Scalar v = 0;
    if (alpha[i] <= 0) {
      v = Scalar(1) - margin;
    } else if (alpha[i] >= C) {
      v = margin - Scalar(1);
    } else {
      v = std::abs(margin - Scalar(1));
    }
    worst = std::max(worst, v);
  }
  return worst;
}

/// Bias minimizing the largest KKT violation for fixed (alpha, w). Every
/// point bounds b from below, above, or both; the midpoint of the tightest
/// bounds is optimal for the max-violation criterion.
template <typename Scalar>
Scalar fit_bias(const RowMatrix<Scalar>& X, const Vector<Scalar>& y, const Vector<Scalar>& alpha,
                const Vector<Scalar>& w, Scalar C) {
  constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();
  Scalar lower = -inf;
  Scalar upper = inf;
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const Scalar target = y[i] - X.row(i).dot(w);  // b making y_i f(x_i) == 1
    const bool at_zero = alpha[i] <= 0;
    const bool at_c = alpha[i] >= C;
    const bool positive = y[i] > 0;
    if (!at_zero && !at_c) {
      lower = std::max(lower, target);
      upper = std::min(upper, target);
    } else if (at_zero == positive) {
      lower = std::max(lower, target);
    } else {
      upper = std::min(upper, target);
    }
  }
  if (lower == -inf && upper == inf) return 0;
  if (lower == -inf) return upper;
  if (upper == inf) return lower;
  return (lower + upper) / 2;
}

namespace detail {

template <typename Scalar>
class SmoSolver {
 public:
  SmoSolver(const RowMatrix<Scalar>& X, const Vector<Scalar>& y, const SmoParams<Scalar>& p)
      : X_(X), y_(y), p_(p), n_(X.rows()) {
    alpha_ = Vector<Scalar>::Zero(n_);
    w_ = Vector<Scalar>::Zero(X.cols());
    grad_ = -y_;
  }

  SmoResult<Scalar> run() {
    const std::int64_t cap = p_.resolved_max_iters(n_);
    std::int64_t passes = 0;
    while (passes < p_.max_passes && iterations_ < cap) {
      std::int64_t changed = 0;
      for (Eigen::Index i = 0; i < n_ && iterations_ < cap; ++i) {
        const Eigen::Index j = partner_for(i);
        if (j >= 0 && optimize_with(i, j, cap)) ++changed;
      }
      passes = changed == 0 ? passes + 1 : 0;
    }

    SmoResult<Scalar> r;
    r.alpha = alpha_;
    r.w = X_.transpose() * alpha_.cwiseProduct(y_);
    r.b = fit_bias(X_, y_, alpha_, r.w, p_.C);
    r.iterations = iterations_;
    r.updates = updates_;
    r.hit_iteration_cap = iterations_ >= cap;
    r.max_kkt_violation = kkt_violation(X_, y_, alpha_, r.w, r.b, p_.C);
    return r;
  }

 private:
  bool in_up(Eigen::Index i) const { return y_[i] > 0 ? alpha_[i] < p_.C : alpha_[i] > 0; }
  bool in_low(Eigen::Index i) const { return y_[i] > 0 ? alpha_[i] > 0 : alpha_[i] < p_.C; }

  // Second choice for first-choice point i, or -1 when i is not part of a
  // pair violating optimality by more than 2 tol.
  Eigen::Index partner_for(Eigen::Index i) const {
    Eigen::Index up_arg = -1, low_arg = -1;
    for (Eigen::Index k = 0; k < n_; ++k) {
      if (in_up(k) && (up_arg < 0 || grad_[k] < grad_[up_arg])) up_arg = k;
      if (in_low(k) && (low_arg < 0 || grad_[k] > grad_[low_arg])) low_arg = k;
    }
    const Scalar slack = 2 * p_.tol;
    Scalar low_gap = -1, up_gap = -1;
    if (in_low(i) && up_arg >= 0 && up_arg != i) low_gap = grad_[i] - grad_[up_arg];
    if (in_up(i) && low_arg >= 0 && low_arg != i) up_gap = grad_[low_arg] - grad_[i];
    const bool low_violates = low_gap > slack;
    const bool up_violates = up_gap > slack;
    if (low_violates && up_violates) {
      if (low_gap != up_gap) return low_gap > up_gap ? up_arg : low_arg;
      return std::min(up_arg, low_arg);
    }
    if (low_violates) return up_arg;
    if (up_violates) return low_arg;
    return -1;
  }

  bool optimize_with(Eigen::Index i, Eigen::Index best, std::int64_t cap) {
    ++iterations_;
    if (take_step(best, i)) return true;
    for (Eigen::Index k = 1; k < n_ && iterations_ < cap; ++k) {
      const Eigen::Index j = (i + k) % n_;
      if (j == best) continue;
      ++iterations_;
      if (take_step(j, i)) return true;
    }
    return false;
  }

  Scalar kernel(Eigen::Index a, Eigen::Index b) const { return X_.row(a).dot(X_.row(b)); }

  // Jointly optimizes (alpha_i1, alpha_i2) analytically along the equality
  // constraint line, clipped to the box.
  bool take_step(Eigen::Index i1, Eigen::Index i2) {
    if (i1 == i2) return false;
    const Scalar C = p_.C;
    const Scalar a1 = alpha_[i1], a2 = alpha_[i2];
    const Scalar y1 = y_[i1], y2 = y_[i2];
    const Scalar g1 = grad_[i1], g2 = grad_[i2];
    const Scalar s = y1 * y2;

    Scalar lo, hi;
    if (y1 != y2) {
      lo = std::max(Scalar(0), a2 - a1);
      hi = std::min(C, C + a2 - a1);
    } else {
      lo = std::max(Scalar(0), a1 + a2 - C);
      hi = std::min(C, a1 + a2);
    }
    if (lo >= hi) return false;

    const Scalar k11 = kernel(i1, i1), k12 = kernel(i1, i2), k22 = kernel(i2, i2);
    const Scalar eta = k11 + k22 - 2 * k12;

    Scalar a2_new;
    if (eta > kEps) {
      a2_new = std::clamp(a2 + y2 * (g1 - g2) / eta, lo, hi);
    } else {
      // Flat or degenerate direction: move to whichever end of the segment
      // has the larger dual objective.
      const Scalar f1 = y1 * g1 - a1 * k11 - s * a2 * k12;
      const Scalar f2 = y2 * g2 - s * a1 * k12 - a2 * k22;
      const auto objective_at = [&](Scalar a2v) {
        const Scalar a1v = a1 + s * (a2 - a2v);
        return -(a1v * f1 + a2v * f2 + Scalar(0.5) * a1v * a1v * k11 +
                 Scalar(0.5) * a2v * a2v * k22 + s * a1v * a2v * k12);
      };
      const Scalar obj_lo = objective_at(lo), obj_hi = objective_at(hi);
      if (obj_lo > obj_hi + kEps) {
        a2_new = lo;
      } else if (obj_hi > obj_lo + kEps) {
        a2_new = hi;
      } else {
        a2_new = a2;
      }
    }
    if (std::abs(a2_new - a2) < kEps * (a2_new + a2 + kEps)) return false;

    Scalar a1_new = a1 + s * (a2 - a2_new);
    // Round-off can push a1 just outside the box; shift the excess onto a2 so
    // the equality constraint stays exact.
    if (a1_new < 0) {
      a2_new += s * a1_new;
      a1_new = 0;
    } else if (a1_new > C) {
      a2_new += s * (a1_new - C);
      a1_new = C;
    }
    a2_new = std::clamp(a2_new, Scalar(0), C);

    const Scalar d1 = y1 * (a1_new - a1);
    const Scalar d2 = y2 * (a2_new - a2);
    w_ += d1 * X_.row(i1).transpose() + d2 * X_.row(i2).transpose();
    alpha_[i1] = a1_new;
    alpha_[i2] = a2_new;
    grad_ = X_ * w_ - y_;
    ++updates_;

    assert(alpha_.minCoeff() >= 0 && alpha_.maxCoeff() <= C);
    assert(std::abs(alpha_.dot(y_)) <= Scalar(1e-10) * std::max(Scalar(1), alpha_.sum()));
    return true;
  }

  static constexpr Scalar kEps = Scalar(1e-12);

  const RowMatrix<Scalar>& X_;
  const Vector<Scalar>& y_;
  const SmoParams<Scalar>& p_;
  Eigen::Index n_;
  Vector<Scalar> alpha_;
  Vector<Scalar> w_;
  Vector<Scalar> grad_;  // F_i = w.x_i - y_i
  std::int64_t iterations_ = 0;
  std::int64_t updates_ = 0;
};

}  // namespace detail

/// Rows of X are training points, y holds +1/-1 labels.
template <typename Scalar>
SmoResult<Scalar> solve_smo(const RowMatrix<Scalar>& X, const Vector<Scalar>& y,
                            const SmoParams<Scalar>& params) {
  return detail::SmoSolver<Scalar>(X, y, params).run();
}

}  // namespace senti
