#ifndef WAVELIFT_SPECTRAL_HPP
#define WAVELIFT_SPECTRAL_HPP

// Frequency-domain view of filters: transfer functions, the perfect
// reconstruction identity, the elevation transfer-function identities and
// Riesz bounds from the periodization Gamma(w) = sum_k |phi^(w + 2k pi)|^2.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "wavelift/filter.hpp"

namespace wavelift {

using Complex = std::complex<double>;

inline constexpr int kDefaultGrid = 1024;
inline constexpr int kDefaultProductDepth = 24;
inline constexpr int kDefaultAliasTerms = 64;
inline constexpr double kNonRieszThreshold = 1e-4;

/// Evaluation view of a filter as a 2pi-periodic transfer function.
class TrigSymbol {
 public:
  explicit TrigSymbol(Filter f) : filter_(std::move(f)) {}

  const Filter& filter() const noexcept { return filter_; }

  /// m(w) = sum_k c_k e^{-ikw}, by Horner's rule in z = e^{-iw}.
  Complex operator()(double w) const {
    const Complex z = std::polar(1.0, -w);
    const auto c = filter_.coeffs();
    Complex acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc * std::polar(1.0, -static_cast<double>(filter_.offset()) * w);
  }

 private:
  Filter filter_;
};

inline Complex eval_symbol(const Filter& f, double w) { return TrigSymbol(f)(w); }

/// S_s(w) = (1 - e^{-iw})^s
inline Complex s_factor(int s, double w) {
  return std::pow(Complex(1.0, 0.0) - std::polar(1.0, -w), s);
}

/// P0^(s)(w) = 2^-s S_s(2w)/S_s(w) m0(w), evaluated as ((1 + e^{-iw})/2)^s m0(w),
/// which is also the value at the removable singularities.
inline Complex elevated_symbol_primal(const TrigSymbol& m0, int s, double w) {
  const Complex half_sum = 0.5 * (Complex(1.0, 0.0) + std::polar(1.0, -w));
  return std::pow(half_sum, s) * m0(w);
}

inline double grid_frequency(int i, int gridsize) {
  return 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(gridsize);
}

/// max_w |m0(w) conj(md(w)) + m0(w+pi) conj(md(w+pi)) - 1| over a uniform grid.
inline double pr_residual(const FilterBank& bank, int gridsize = kDefaultGrid) {
  const TrigSymbol m0(bank.primal());
  const TrigSymbol md(bank.dual());
  double worst = 0.0;
  for (int i = 0; i < gridsize; ++i) {
    const double w = grid_frequency(i, gridsize);
    const double wp = w + std::numbers::pi;
    const Complex v = m0(w) * std::conj(md(w)) + m0(wp) * std::conj(md(wp)) - 1.0;
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

/// max_w | |m0(w)|^2 + |m0(w+pi)|^2 - 1 |; zero for orthonormal filters.
inline double orthonormality_deviation(const Filter& f, int gridsize = kDefaultGrid) {
  const TrigSymbol m0(f);
  double worst = 0.0;
  for (int i = 0; i < gridsize; ++i) {
    const double w = grid_frequency(i, gridsize);
    const double v = std::norm(m0(w)) + std::norm(m0(w + std::numbers::pi)) - 1.0;
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

/// Truncated infinite product phi^(w) = prod_{j=1..depth} m0(w / 2^j).
inline Complex scaling_fourier(const TrigSymbol& m0, double w, int depth = kDefaultProductDepth) {
  Complex acc{1.0, 0.0};
  double x = w;
  for (int j = 1; j <= depth; ++j) {
    x *= 0.5;
    acc *= m0(x);
  }
  return acc;
}

inline Complex scaling_fourier(const Filter& f, double w, int depth = kDefaultProductDepth) {
  return scaling_fourier(TrigSymbol(f), w, depth);
}

struct GammaProfile {
  std::vector<double> grid;
  std::vector<double> values;
  double lower_bound = 0.0;  // A
  double upper_bound = 0.0;  // B
  bool non_riesz = false;
  bool diverging = false;  // alias sum not settled: generator not in L^2
};

/// Gamma(w) = sum_{|k|<=K} |phi^(w + 2k pi)|^2 on a grid over [0, 2pi).
/// NonRiesz when A < 1e-4. Separately, `diverging` is set when the outer half
/// of the alias terms (K/2 < |k| <= K) still carries a quarter of the sum, so
/// B grows with K. A length-1 filter refines a point mass and is flagged
/// NonRiesz without summing.
inline GammaProfile gamma(const Filter& f, int gridsize = kDefaultGrid, int depth = kDefaultProductDepth,
                          int alias_terms = kDefaultAliasTerms) {
  GammaProfile out;
  if (f.size() == 1) {
    out.non_riesz = true;
    out.diverging = true;
    out.lower_bound = std::numeric_limits<double>::infinity();
    out.upper_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  const TrigSymbol m0(f);
  out.grid.reserve(static_cast<std::size_t>(gridsize));
  out.values.reserve(static_cast<std::size_t>(gridsize));
  double worst_tail = 0.0;
  for (int i = 0; i < gridsize; ++i) {
    const double w = grid_frequency(i, gridsize);
    double acc = 0.0;
    double tail = 0.0;
    for (int k = -alias_terms; k <= alias_terms; ++k) {
      const double term = std::norm(scaling_fourier(m0, w + 2.0 * std::numbers::pi * k, depth));
      acc += term;
      if (2 * std::abs(k) > alias_terms) tail += term;
    }
    out.grid.push_back(w);
    out.values.push_back(acc);
    if (acc > 0.0) worst_tail = std::max(worst_tail, tail / acc);
  }
  const auto [lo, hi] = std::minmax_element(out.values.begin(), out.values.end());
  out.lower_bound = *lo;
  out.upper_bound = *hi;
  out.non_riesz = !(out.lower_bound >= kNonRieszThreshold) || !std::isfinite(out.upper_bound);
  out.diverging = worst_tail > 0.25;
  return out;
}

/// Residuals of the four elevation transfer-function identities, in their
/// division-free forms, comparing an original bank with its order-s elevation.
struct SymbolIdentityResiduals {
  double primal_lowpass = 0.0;   // S_s(w) P0(w) = 2^-s S_s(2w) m0(w)
  double dual_lowpass = 0.0;     // conj(S_s(2w)) Pd0(w) = 2^s conj(S_s(w)) md0(w)
  double primal_highpass = 0.0;  // S_s(w) P1(w) = 2^s m1(w)
  double dual_highpass = 0.0;    // Pd1(w) = 2^-s conj(S_s(w)) md1(w)

  double max() const noexcept {
    return std::max({primal_lowpass, dual_lowpass, primal_highpass, dual_highpass});
  }
};

inline SymbolIdentityResiduals symbol_identity_residuals(const FilterBank& original, const FilterBank& elevated,
                                                         int s, int gridsize = kDefaultGrid) {
  const auto hp = derive_highpass(original);
  const auto hp_up = derive_highpass(elevated);
  const TrigSymbol m0(original.primal()), md0(original.dual()), m1(hp.primal), md1(hp.dual);
  const TrigSymbol p0(elevated.primal()), pd0(elevated.dual()), p1(hp_up.primal), pd1(hp_up.dual);
  const double up = std::ldexp(1.0, s);
  const double down = std::ldexp(1.0, -s);

  SymbolIdentityResiduals r;
  for (int i = 0; i < gridsize; ++i) {
    const double w = grid_frequency(i, gridsize);
    const Complex sw = s_factor(s, w);
    const Complex s2w = s_factor(s, 2.0 * w);
    r.primal_lowpass = std::max(r.primal_lowpass, std::abs(sw * p0(w) - down * s2w * m0(w)));
    r.dual_lowpass = std::max(r.dual_lowpass, std::abs(std::conj(s2w) * pd0(w) - up * std::conj(sw) * md0(w)));
    r.primal_highpass = std::max(r.primal_highpass, std::abs(sw * p1(w) - up * m1(w)));
    r.dual_highpass = std::max(r.dual_highpass, std::abs(pd1(w) - down * std::conj(sw) * md1(w)));
  }
  return r;
}

}  // namespace wavelift

#endif  // WAVELIFT_SPECTRAL_HPP
