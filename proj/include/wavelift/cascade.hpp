#ifndef WAVELIFT_CASCADE_HPP
#define WAVELIFT_CASCADE_HPP

// Time-domain realization on dyadic grids: the cascade (refinement) iteration
// for scaling functions and wavelets, the integration operator
// (Tf)(x) = int_{x-1}^{x} f(t) dt by trapezoid quadrature, and closed-form
// cardinal B-splines for comparison.
//
// Functions are sampled at x_i = i * 2^-J. A sample that falls on a jump
// carries the mean of the one-sided limits. Quadrature is the trapezoid rule
// with the samples extended by zero, so integrals over R are h * sum(values).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "wavelift/error.hpp"
#include "wavelift/filter.hpp"

namespace wavelift {

inline constexpr int kDefaultCascadeIterations = 12;
inline constexpr double kCascadeTol = 1e-10;

/// Samples of a compactly supported function at grid indices
/// first, first+1, ..., first+n-1 of the level-J dyadic grid.
class SampledFunction {
 public:
  SampledFunction(int level, long first, std::vector<double> values)
      : level_(level), first_(first), values_(std::move(values)) {
    if (level_ < 0) throw Error(ErrorCode::InvalidArgument, "grid level must be non-negative");
    if (values_.size() < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples");
    for (double v : values_) {
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "samples must be finite");
    }
  }

  int level() const noexcept { return level_; }
  double step() const noexcept { return std::ldexp(1.0, -level_); }
  long first() const noexcept { return first_; }
  long last() const noexcept { return first_ + static_cast<long>(values_.size()) - 1; }
  double origin() const noexcept { return static_cast<double>(first_) * step(); }
  double end() const noexcept { return static_cast<double>(last()) * step(); }
  double x(long index) const noexcept { return static_cast<double>(index) * step(); }

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Value at a global grid index, zero outside the stored range.
  double at(long index) const noexcept {
    if (index < first_ || index > last()) return 0.0;
    return values_[static_cast<std::size_t>(index - first_)];
  }

 private:
  int level_;
  long first_;
  std::vector<double> values_;
};

inline long grid_points_per_unit(int level) { return 1L << level; }

/// Trapezoid integral over R of the zero-extended samples.
inline double integrate(const SampledFunction& f) {
  double acc = 0.0;
  for (double v : f.values()) acc += v;
  return acc * f.step();
}

inline double sup_distance(const SampledFunction& a, const SampledFunction& b) {
  if (a.level() != b.level()) throw Error(ErrorCode::InvalidArgument, "grids differ in level");
  const long lo = std::min(a.first(), b.first());
  const long hi = std::max(a.last(), b.last());
  double worst = 0.0;
  for (long i = lo; i <= hi; ++i) worst = std::max(worst, std::abs(a.at(i) - b.at(i)));
  return worst;
}

inline double sup_norm(const SampledFunction& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

struct CascadeStats {
  int iterations = 0;
  double last_change = 0.0;
  bool converged_or_decreasing = true;
};

enum class OnNoConvergence { Throw, Keep };

/// phi_{n+1}(x) = 2 sum_k h_k phi_n(2x - k) on the level-J grid covering the
/// filter support, starting from a unit box centered in that support. Stops
/// after `iterations` rounds or once the sup change drops below 1e-10.
inline SampledFunction cascade_scaling(const Filter& f, int level, int iterations = kDefaultCascadeIterations,
                                       CascadeStats* stats = nullptr,
                                       OnNoConvergence policy = OnNoConvergence::Throw) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "cascade needs grid level J >= 1");
  if (f.size() == 1) throw Error(ErrorCode::Unsupported, "length-1 filter refines a point mass; not sampled");
  if (!is_normalized(f)) throw Error(ErrorCode::InvalidArgument, "cascade needs a normalized filter");

  const long n_unit = grid_points_per_unit(level);
  const long first = static_cast<long>(f.first_index()) * n_unit;
  const long last = static_cast<long>(f.last_index()) * n_unit;
  const std::size_t count = static_cast<std::size_t>(last - first + 1);

  // Box of unit width centered at the support midpoint, half value on its edges.
  const long box_lo = (first + last - n_unit) / 2;
  const long box_hi = box_lo + n_unit;
  std::vector<double> cur(count, 0.0);
  for (long i = box_lo; i <= box_hi; ++i) {
    cur[static_cast<std::size_t>(i - first)] = (i == box_lo || i == box_hi) ? 0.5 : 1.0;
  }

  auto at = [&](const std::vector<double>& v, long index) {
    if (index < first || index > last) return 0.0;
    return v[static_cast<std::size_t>(index - first)];
  };

  std::vector<double> next(count);
  std::vector<double> changes;
  bool converged = false;
  for (int round = 0; round < iterations; ++round) {
    double change = 0.0;
    for (long i = first; i <= last; ++i) {
      double acc = 0.0;
      for (int k = f.first_index(); k <= f.last_index(); ++k) acc += f[k] * at(cur, 2 * i - k * n_unit);
      acc *= 2.0;
      next[static_cast<std::size_t>(i - first)] = acc;
      change = std::max(change, std::abs(acc - at(cur, i)));
    }
    std::swap(cur, next);
    changes.push_back(change);
    if (change < kCascadeTol) {
      converged = true;
      break;
    }
  }
  const bool stalled = !converged && changes.size() >= 4 && changes.back() >= changes[changes.size() - 4];
  if (stalled && policy == OnNoConvergence::Throw) {
    throw Error(ErrorCode::NoConvergence, "cascade sup change did not decrease over the final 3 rounds");
  }
  if (stats != nullptr) {
    stats->iterations = static_cast<int>(changes.size());
    stats->last_change = changes.empty() ? 0.0 : changes.back();
    stats->converged_or_decreasing = !stalled;
  }
  return SampledFunction(level, first, std::move(cur));
}

enum class Side { Primal, Dual };

/// One high-pass refinement step psi(x) = 2 sum_k g_k phi(2x - k) applied to
/// already sampled scaling-function values.
inline SampledFunction refine_highpass(const SampledFunction& phi, const Filter& g) {
  const long n_unit = grid_points_per_unit(phi.level());
  const long first = (phi.first() + static_cast<long>(g.first_index()) * n_unit) / 2;
  const long last = (phi.last() + static_cast<long>(g.last_index()) * n_unit) / 2;
  std::vector<double> out(static_cast<std::size_t>(last - first + 1));
  for (long i = first; i <= last; ++i) {
    double acc = 0.0;
    for (int k = g.first_index(); k <= g.last_index(); ++k) acc += g[k] * phi.at(2 * i - k * n_unit);
    out[static_cast<std::size_t>(i - first)] = 2.0 * acc;
  }
  return SampledFunction(phi.level(), first, std::move(out));
}

/// Wavelet of the requested side: psi from (phi, g) or the dual wavelet from (dual phi, gd).
inline SampledFunction cascade_wavelet(const FilterBank& bank, Side side, int level,
                                       int iterations = kDefaultCascadeIterations) {
  const auto hp = derive_highpass(bank);
  if (side == Side::Primal) return refine_highpass(cascade_scaling(bank.primal(), level, iterations), hp.primal);
  return refine_highpass(cascade_scaling(bank.dual(), level, iterations), hp.dual);
}

enum class Direction { FromLeft, FromRight };

/// Cumulative trapezoid integral: int_{-inf}^{x} f or int_{x}^{inf} f.
inline SampledFunction cumulative_integral(const SampledFunction& f, Direction dir) {
  const auto& v = f.values();
  const double h = f.step();
  std::vector<double> out(v.size());
  double running = 0.0;
  if (dir == Direction::FromLeft) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out[i] = h * (running + 0.5 * v[i]);
      running += v[i];
    }
  } else {
    for (std::size_t i = v.size(); i-- > 0;) {
      out[i] = h * (running + 0.5 * v[i]);
      running += v[i];
    }
  }
  return SampledFunction(f.level(), f.first(), std::move(out));
}

/// (Tf)(x) = int_{x-1}^{x} f(t) dt. The support grows by 1 on the right.
inline SampledFunction apply_T(const SampledFunction& f) {
  const long n_unit = grid_points_per_unit(f.level());
  const auto cumulative = cumulative_integral(f, Direction::FromLeft);
  const double total = integrate(f);
  auto primitive = [&](long index) {
    if (index < f.first()) return 0.0;
    if (index > f.last()) return total;
    return cumulative.at(index);
  };
  std::vector<double> out(f.size() + static_cast<std::size_t>(n_unit));
  for (std::size_t j = 0; j < out.size(); ++j) {
    const long i = f.first() + static_cast<long>(j);
    out[j] = primitive(i) - primitive(i - n_unit);
  }
  return SampledFunction(f.level(), f.first(), std::move(out));
}

/// Cardinal B-spline of the given order on [0, order] by the Cox-de Boor
/// recursion B_m(x) = (x B_{m-1}(x) + (m - x) B_{m-1}(x - 1)) / (m - 1).
inline double bspline_value(int order, double x) {
  if (order == 1) {
    if (x > 0.0 && x < 1.0) return 1.0;
    if (x == 0.0 || x == 1.0) return 0.5;
    return 0.0;
  }
  if (x <= 0.0 || x >= order) return 0.0;
  const double m = static_cast<double>(order);
  return (x * bspline_value(order - 1, x) + (m - x) * bspline_value(order - 1, x - 1.0)) / (m - 1.0);
}

inline SampledFunction bspline_reference(int order, int level) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "B-spline order must be >= 1");
  const long n_unit = grid_points_per_unit(level);
  const long last = static_cast<long>(order) * n_unit;
  std::vector<double> out(static_cast<std::size_t>(last + 1));
  const double h = std::ldexp(1.0, -level);
  for (long i = 0; i <= last; ++i) out[static_cast<std::size_t>(i)] = bspline_value(order, static_cast<double>(i) * h);
  return SampledFunction(level, 0, std::move(out));
}

/// Sup distance between the cascade of the s-elevated filter and s-fold
/// quadrature of T applied to the cascade of the original filter.
inline double check_operator_identity(const Filter& f, int s, int level,
                                      int iterations = kDefaultCascadeIterations) {
  if (s == 0) return 0.0;
  const auto elevated = cascade_scaling(binomial_elevate_primal(f, ElevationOrder(s)), level, iterations);
  auto integrated = cascade_scaling(f, level, iterations);
  for (int r = 0; r < s; ++r) integrated = apply_T(integrated);
  return sup_distance(elevated, integrated);
}

struct ProportionalFit {
  double constant = 0.0;
  double residual = 0.0;  // max |target - c basis| / max |target|
};

/// Least-squares c with target ~ c * basis over the union of both grids.
inline ProportionalFit fit_proportional(const SampledFunction& target, const SampledFunction& basis) {
  if (target.level() != basis.level()) throw Error(ErrorCode::InvalidArgument, "grids differ in level");
  const long lo = std::min(target.first(), basis.first());
  const long hi = std::max(target.last(), basis.last());
  double tb = 0.0;
  double bb = 0.0;
  for (long i = lo; i <= hi; ++i) {
    tb += target.at(i) * basis.at(i);
    bb += basis.at(i) * basis.at(i);
  }
  ProportionalFit fit;
  if (bb == 0.0) throw Error(ErrorCode::InvalidArgument, "basis function is identically zero");
  fit.constant = tb / bb;
  double worst = 0.0;
  for (long i = lo; i <= hi; ++i) worst = std::max(worst, std::abs(target.at(i) - fit.constant * basis.at(i)));
  const double scale = sup_norm(target);
  fit.residual = scale > 0.0 ? worst / scale : std::numeric_limits<double>::infinity();
  return fit;
}

/// Fits Psi(x) ~ c int_{-inf}^{x} psi(t) dt; c is 4 for an order-1 elevation.
inline ProportionalFit check_integral_relation(const SampledFunction& elevated_wavelet,
                                               const SampledFunction& wavelet) {
  return fit_proportional(elevated_wavelet, cumulative_integral(wavelet, Direction::FromLeft));
}

/// Dual direction: fits int_{x}^{inf} Psi_dual(t) dt ~ c psi_dual(x); c is 1/4
/// for an order-1 elevation. The adjoint integrates to the right.
inline ProportionalFit check_dual_integral_relation(const SampledFunction& elevated_dual_wavelet,
                                                    const SampledFunction& dual_wavelet) {
  return fit_proportional(cumulative_integral(elevated_dual_wavelet, Direction::FromRight), dual_wavelet);
}

/// Largest |f(x) - sign * f(2c - x)| over the samples, for a center given as 2c.
inline double symmetry_defect(const SampledFunction& f, int twice_center, double sign = 1.0) {
  const long mirror = static_cast<long>(twice_center) * grid_points_per_unit(f.level());
  double worst = 0.0;
  for (long i = f.first(); i <= f.last(); ++i) worst = std::max(worst, std::abs(f.at(i) - sign * f.at(mirror - i)));
  return worst;
}

}  // namespace wavelift

#endif  // WAVELIFT_CASCADE_HPP
