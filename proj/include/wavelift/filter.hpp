#ifndef WAVELIFT_FILTER_HPP
#define WAVELIFT_FILTER_HPP

// Filter algebra for biorthogonal filter banks: binomial elevation of the
// primal low-pass filter, binomial reduction (deconvolution) of the dual
// low-pass filter, and the support/symmetry bookkeeping around them.
//
// All filters use the low-pass normalization sum(h) == 1, i.e. m0(0) == 1.
// The symbol of a filter is m(w) = sum_k c_k e^{-ikw}; in terms of z = e^{-iw}
// a filter is a Laurent polynomial sum_k c_k z^k.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavelift/error.hpp"

namespace wavelift {

inline constexpr double kNormalizationTol = 1e-12;
inline constexpr double kDivisibilityTol = 1e-9;
inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kPerfectReconstructionTol = 1e-9;

/// Finite real filter h_k stored from index `offset` onwards.
/// Canonical form: non-empty, first and last taps nonzero.
class Filter {
 public:
  Filter(int offset, std::vector<double> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](double c) { return c != 0.0; });
    if (first == coeffs_.end()) {
      throw Error(ErrorCode::InvalidArgument, "filter must have at least one nonzero tap");
    }
    auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](double c) { return c != 0.0; });
    offset_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(last.base(), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), first);
    for (double c : coeffs_) {
      if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "filter taps must be finite");
    }
  }

  int offset() const noexcept { return offset_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  int first_index() const noexcept { return offset_; }
  int last_index() const noexcept { return offset_ + static_cast<int>(coeffs_.size()) - 1; }

  /// h_k, zero outside the stored range.
  double operator[](int k) const noexcept {
    const int i = k - offset_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  double sum() const noexcept {
    double acc = 0.0;
    for (double c : coeffs_) acc += c;
    return acc;
  }

  double max_abs() const noexcept {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  Filter shifted(int n) const { return Filter(offset_ + n, coeffs_); }

  friend bool operator==(const Filter&, const Filter&) = default;

 private:
  int offset_;
  std::vector<double> coeffs_;
};

/// Order s of an elevation; s >= 0.
class ElevationOrder {
 public:
  explicit ElevationOrder(int s) : s_(s) {
    if (s < 0) throw Error(ErrorCode::InvalidArgument, "elevation order must be non-negative");
  }
  int value() const noexcept { return s_; }

 private:
  int s_;
};

struct Support {
  int first;
  int last;
  friend bool operator==(const Support&, const Support&) = default;
};

inline Support support(const Filter& f) { return {f.first_index(), f.last_index()}; }

inline bool is_normalized(const Filter& f, double tol = kNormalizationTol) {
  return std::abs(f.sum() - 1.0) <= tol;
}

/// Rescales the taps so they sum to 1. Throws ZeroMass for a zero-sum filter.
inline Filter normalize(const Filter& f) {
  const double mass = f.sum();
  if (std::abs(mass) < 1e-14) {
    throw Error(ErrorCode::ZeroMass, "filter taps sum to zero and cannot be normalized");
  }
  std::vector<double> out(f.coeffs().begin(), f.coeffs().end());
  for (double& c : out) c /= mass;
  return Filter(f.offset(), std::move(out));
}

/// Row s of Pascal's triangle.
inline std::vector<double> binomial_row(int s) {
  std::vector<double> row(static_cast<std::size_t>(s) + 1, 1.0);
  for (int l = 1; l < s; ++l) {
    row[static_cast<std::size_t>(l)] =
        row[static_cast<std::size_t>(l - 1)] * static_cast<double>(s - l + 1) / static_cast<double>(l);
  }
  return row;
}

/// H_k = 2^-s * sum_{l=0..s} C(s,l) h_{k-l}. The offset is kept, so the
/// support grows by s taps on the right.
inline Filter binomial_elevate_primal(const Filter& h, ElevationOrder order) {
  const int s = order.value();
  if (s == 0) return h;
  const auto row = binomial_row(s);
  const double scale = std::ldexp(1.0, -s);
  std::vector<double> out(h.size() + static_cast<std::size_t>(s), 0.0);
  const auto taps = h.coeffs();
  for (std::size_t i = 0; i < taps.size(); ++i) {
    for (std::size_t l = 0; l < row.size(); ++l) out[i + l] += row[l] * taps[i];
  }
  for (double& c : out) c *= scale;
  return Filter(h.offset(), std::move(out));
}

namespace detail {

// Synthetic division of sum_j a_j z^j by (z - root), lowest degree first.
// Forward substitution leaves the remainder on the top coefficient:
//   a(z) = (z - root) q(z) + r z^{n-1}.
struct Division {
  std::vector<double> quotient;
  double remainder;
};

inline Division divide_linear(std::span<const double> a, double root) {
  // a_0 = -root q_0, a_j = q_{j-1} - root q_j  =>  q_j = (q_{j-1} - a_j) / root.
  Division d;
  const std::size_t n = a.size();
  if (n < 2) {
    d.remainder = n == 1 ? a[0] : 0.0;
    return d;
  }
  d.quotient.resize(n - 1);
  double prev = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    d.quotient[j] = (prev - a[j]) / root;
    prev = d.quotient[j];
  }
  d.remainder = a[n - 1] - prev;
  return d;
}

}  // namespace detail

enum class RootPoint { MinusOne, PlusOne };

/// Largest m such that (z - point)^m divides the symbol, judged by remainders
/// below tol * max|coeff| of each successive dividend. The input is untouched.
inline int root_multiplicity(const Filter& f, RootPoint point, double tol = kDivisibilityTol) {
  const double root = point == RootPoint::MinusOne ? -1.0 : 1.0;
  std::vector<double> current(f.coeffs().begin(), f.coeffs().end());
  int m = 0;
  while (current.size() >= 2) {
    double scale = 0.0;
    for (double c : current) scale = std::max(scale, std::abs(c));
    auto d = detail::divide_linear(current, root);
    if (std::abs(d.remainder) > tol * scale) break;
    current = std::move(d.quotient);
    ++m;
  }
  return m;
}

/// Solves sum_l C(s,l) Ht_{k-l} = 2^s ht_k for Ht, i.e. Ht(z) = 2^s ht(z) / (1+z)^s,
/// by s rounds of synthetic division by (1+z), each followed by a factor 2.
/// The offset is kept. Throws NotDivisible when a round leaves a remainder.
inline Filter binomial_reduce_dual(const Filter& hd, ElevationOrder order) {
  const int s = order.value();
  if (s == 0) return hd;
  std::vector<double> current(hd.coeffs().begin(), hd.coeffs().end());
  for (int round = 1; round <= s; ++round) {
    double scale = 0.0;
    for (double c : current) scale = std::max(scale, std::abs(c));
    auto d = detail::divide_linear(current, -1.0);
    if (current.size() < 2 || std::abs(d.remainder) > kDivisibilityTol * scale) {
      throw Error(ErrorCode::NotDivisible,
                  "dual filter is not divisible by (1+z)^" + std::to_string(s) + " (round " +
                      std::to_string(round) + " left remainder " + std::to_string(d.remainder) + ")");
    }
    for (double& c : d.quotient) c *= 2.0;
    current = std::move(d.quotient);
  }
  // Unreachable for a nonzero filter: divisibility by (1+z)^s forces length > s.
  if (current.empty()) throw Error(ErrorCode::TooShort, "dual filter too short for the requested order");
  return Filter(hd.offset(), std::move(current));
}

/// Symmetry class of a filter about the midpoint of its support.
struct Symmetry {
  enum class Kind { Symmetric, Antisymmetric, None };
  Kind kind = Kind::None;
  int twice_center = 0;  // center = twice_center / 2, integer or half-integer

  double center() const noexcept { return 0.5 * twice_center; }
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

inline std::string to_string(Symmetry::Kind kind) {
  switch (kind) {
    case Symmetry::Kind::Symmetric: return "symmetric";
    case Symmetry::Kind::Antisymmetric: return "antisymmetric";
    case Symmetry::Kind::None: return "none";
  }
  return "none";
}

inline Symmetry symmetry_type(const Filter& f, double tol = kSymmetryTol) {
  const auto c = f.coeffs();
  const std::size_t n = c.size();
  bool sym = true;
  bool anti = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = c[i];
    const double b = c[n - 1 - i];
    sym = sym && std::abs(a - b) <= tol;
    anti = anti && std::abs(a + b) <= tol;
  }
  Symmetry out;
  out.twice_center = f.first_index() + f.last_index();
  if (sym) {
    out.kind = Symmetry::Kind::Symmetric;
  } else if (anti) {
    out.kind = Symmetry::Kind::Antisymmetric;
  } else {
    out.kind = Symmetry::Kind::None;
    out.twice_center = 0;
  }
  return out;
}

/// Time-domain biorthogonality defect: max_n |2 sum_k h_k hd_{k-2n} - delta_{n,0}|.
/// Zero exactly when m0(w) conj(md(w)) + m0(w+pi) conj(md(w+pi)) == 1.
inline double biorthogonality_defect(const Filter& h, const Filter& hd) {
  const int lo = (h.first_index() - hd.last_index()) / 2 - 1;
  const int hi = (h.last_index() - hd.first_index()) / 2 + 1;
  double worst = 0.0;
  for (int n = lo; n <= hi; ++n) {
    double acc = 0.0;
    for (int k = h.first_index(); k <= h.last_index(); ++k) acc += h[k] * hd[k - 2 * n];
    worst = std::max(worst, std::abs(2.0 * acc - (n == 0 ? 1.0 : 0.0)));
  }
  return worst;
}

/// Primal/dual low-pass pair (h refines phi, hd refines the dual phi).
/// Both filters are required to be normalized; perfect reconstruction is
/// checked by the constructors that promise it (families, elevate).
class FilterBank {
 public:
  FilterBank(std::string name, Filter primal, Filter dual)
      : name_(std::move(name)), primal_(std::move(primal)), dual_(std::move(dual)) {
    if (!is_normalized(primal_) || !is_normalized(dual_)) {
      throw Error(ErrorCode::InvalidArgument, "filter bank low-pass filters must sum to 1");
    }
  }

  const std::string& name() const noexcept { return name_; }
  const Filter& primal() const noexcept { return primal_; }
  const Filter& dual() const noexcept { return dual_; }

  /// Length-1 dual: the dual scaling function is a point mass.
  bool degenerate_dual() const noexcept { return dual_.size() == 1; }

  friend bool operator==(const FilterBank&, const FilterBank&) = default;

 private:
  std::string name_;
  Filter primal_;
  Filter dual_;
};

/// High-pass filters by alternating flip:
///   g_n = (-1)^n hd_{1-n},  gd_n = (-1)^n h_{1-n}.
struct HighPass {
  Filter primal;  // g, builds psi from phi
  Filter dual;    // gd, builds the dual wavelet from the dual phi
};

inline Filter alternating_flip(const Filter& f) {
  const int first = 1 - f.last_index();
  std::vector<double> out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int n = first + static_cast<int>(i);
    out[i] = ((n % 2 == 0) ? 1.0 : -1.0) * f[1 - n];
  }
  return Filter(first, std::move(out));
}

inline HighPass derive_highpass(const FilterBank& bank) {
  return {alternating_flip(bank.dual()), alternating_flip(bank.primal())};
}

namespace detail {

inline std::string elevated_name(const std::string& base, int s) {
  return base + "^(" + std::to_string(s) + ")";
}

inline FilterBank elevate_pair(const std::string& name, const Filter& primal, const Filter& dual, int s) {
  const int available = root_multiplicity(dual, RootPoint::MinusOne);
  if (available < s) {
    throw Error(ErrorCode::NotDivisible, "dual multiplicity at z=-1 is " + std::to_string(available) +
                                             " < s=" + std::to_string(s));
  }
  const ElevationOrder order(s);
  Filter up = binomial_elevate_primal(primal, order);
  // The adjoint operator integrates to the right, so the reduced dual moves
  // s steps right; this keeps m0 * conj(md) and hence the PR identity intact.
  Filter down = binomial_reduce_dual(dual, order).shifted(s);
  return FilterBank(elevated_name(name, s), std::move(up), std::move(down));
}

}  // namespace detail

/// Elevation at order s: primal gains s smoothness factors (1+z)/2, dual loses them.
inline FilterBank elevate(const FilterBank& bank, ElevationOrder order) {
  const int s = order.value();
  if (s == 0) return bank;
  if (biorthogonality_defect(bank.primal(), bank.dual()) > kPerfectReconstructionTol) {
    throw Error(ErrorCode::NotPerfectReconstruction, "input bank '" + bank.name() + "' is not biorthogonal");
  }
  return detail::elevate_pair(bank.name(), bank.primal(), bank.dual(), s);
}

/// Biorthogonal pair built from a single orthonormal filter h: (elevate(h), reduce(h)).
inline FilterBank elevate_orthonormal(const Filter& h, ElevationOrder order, const std::string& name = "orthonormal") {
  if (biorthogonality_defect(h, h) > kPerfectReconstructionTol) {
    throw Error(ErrorCode::NotPerfectReconstruction, "filter is not orthonormal");
  }
  if (order.value() == 0) return FilterBank(name, h, h);
  return detail::elevate_pair(name, h, h, order.value());
}

/// Shift n with a.shifted(n) == b within tol, if any.
inline std::optional<int> filter_equivalent(const Filter& a, const Filter& b, double tol = 1e-10) {
  if (a.size() != b.size()) return std::nullopt;
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (std::abs(ca[i] - cb[i]) > tol) return std::nullopt;
  }
  return b.offset() - a.offset();
}

}  // namespace wavelift

#endif  // WAVELIFT_FILTER_HPP
