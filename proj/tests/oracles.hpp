#ifndef WAVELIFT_TESTS_ORACLES_HPP
#define WAVELIFT_TESTS_ORACLES_HPP

// Reference computations written independently of the library code paths.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "wavelift/filter.hpp"

namespace oracle {

// Sparse Laurent polynomial: index -> coefficient.
using Taps = std::map<int, double>;

inline Taps taps(const wavelift::Filter& f) {
  Taps out;
  for (int k = f.first_index(); k <= f.last_index(); ++k) out[k] = f[k];
  return out;
}

inline Taps convolve(const Taps& a, const Taps& b) {
  Taps out;
  for (auto [i, x] : a) {
    for (auto [j, y] : b) out[i + j] += x * y;
  }
  return out;
}

inline double pascal(int n, int k) {
  std::vector<double> row{1.0};
  for (int r = 1; r <= n; ++r) {
    std::vector<double> next(row.size() + 1, 0.0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = next;
  }
  return row[static_cast<std::size_t>(k)];
}

// 2^-s (1+z)^s as a Laurent polynomial starting at index 0.
inline Taps smoothing(int s) {
  Taps out;
  for (int l = 0; l <= s; ++l) out[l] = pascal(s, l) / std::ldexp(1.0, s);
  return out;
}

inline double max_gap(const Taps& a, const Taps& b) {
  double worst = 0.0;
  for (auto [k, v] : a) {
    auto it = b.find(k);
    worst = std::max(worst, std::abs(v - (it == b.end() ? 0.0 : it->second)));
  }
  for (auto [k, v] : b) {
    if (!a.contains(k)) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

inline std::complex<double> symbol(const wavelift::Filter& f, double w) {
  std::complex<double> acc{0.0, 0.0};
  for (int k = f.first_index(); k <= f.last_index(); ++k) {
    acc += f[k] * std::complex<double>(std::cos(k * w), -std::sin(k * w));
  }
  return acc;
}

// max_n |2 sum_k h_k hd_{k-2n} - delta_n|
inline double biorthogonality(const wavelift::Filter& h, const wavelift::Filter& hd) {
  double worst = 0.0;
  const int span = static_cast<int>(h.size() + hd.size()) + 4;
  for (int n = -span; n <= span; ++n) {
    double acc = 0.0;
    for (int k = h.first_index(); k <= h.last_index(); ++k) acc += h[k] * hd[k - 2 * n];
    worst = std::max(worst, std::abs(2.0 * acc - (n == 0 ? 1.0 : 0.0)));
  }
  return worst;
}

// Cardinal B-spline from the truncated-power formula, averaged at knots of order 1.
inline double bspline(int m, double x) {
  if (m == 1) {
    if (x == 0.0 || x == 1.0) return 0.5;
    return (x > 0.0 && x < 1.0) ? 1.0 : 0.0;
  }
  double acc = 0.0;
  double fact = 1.0;
  for (int i = 2; i < m; ++i) fact *= i;
  for (int j = 0; j <= m; ++j) {
    const double t = x - j;
    if (t > 0.0) acc += ((j % 2 == 0) ? 1.0 : -1.0) * pascal(m, j) * std::pow(t, m - 1);
  }
  return (x <= 0.0 || x >= m) ? 0.0 : acc / fact;
}

// Poisson summation for the hat function: sum_k |sinc^2((w + 2k pi)/2)|^2.
inline double hat_gamma(double w) { return (2.0 + std::cos(w)) / 3.0; }

}  // namespace oracle

#endif  // WAVELIFT_TESTS_ORACLES_HPP
