#ifndef WAVELIFT_FAMILIES_HPP
#define WAVELIFT_FAMILIES_HPP

// Built-in starting filter banks: Haar, spline biorthogonal CDF(N, Nd) pairs
// and Daubechies orthonormal filters with p = 2, 3, 4 vanishing moments.

#include <algorithm>
#include <cstddef>
#include <locale>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wavelift/error.hpp"
#include "wavelift/filter.hpp"
#include "wavelift/spectral.hpp"

namespace wavelift {

// Copy of data/daubechies.txt (checked against the file by the test suite).
// One record per line: name, offset, taps (sum 1, 17 significant digits).
inline constexpr std::string_view kDaubechiesRecords = R"(# Daubechies orthonormal low-pass filters, taps normalized to sum 1.
# name offset coefficients...
daubechies(2) 0 0.34150635094610966 0.59150635094610966 0.15849364905389034 -0.091506350946109662
daubechies(3) 0 0.23523360389208184 0.57055845791572181 0.32518250026311626 -0.095467207784163681 -0.060416104155198105 0.024908749868441868
daubechies(4) 0 0.16290171402564917 0.50547285754591443 0.44610006912337981 -0.019787513117822322 -0.13225358368451987 0.021808150237088626 0.023251800535490882 -0.0074934946651807362
)";

struct CoefficientRecord {
  std::string name;
  Filter filter;
};

/// Parses whitespace-separated records; '#' starts a comment line.
inline std::vector<CoefficientRecord> parse_coefficient_records(std::string_view text) {
  std::vector<CoefficientRecord> out;
  std::istringstream in{std::string(text)};
  in.imbue(std::locale::classic());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    std::string name;
    int offset = 0;
    if (!(fields >> name >> offset)) {
      throw Error(ErrorCode::ParseError, "bad coefficient record on line " + std::to_string(line_no));
    }
    std::vector<double> taps;
    double v = 0.0;
    while (fields >> v) taps.push_back(v);
    if (!fields.eof() || taps.empty()) {
      throw Error(ErrorCode::ParseError, "bad coefficient list on line " + std::to_string(line_no));
    }
    out.push_back({name, Filter(offset, std::move(taps))});
  }
  return out;
}

inline FilterBank haar() {
  const Filter h(0, {0.5, 0.5});
  return FilterBank("haar", h, h);
}

namespace detail {

struct Laurent {
  int offset = 0;
  std::vector<double> c;
};

inline Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out{a.offset + b.offset, std::vector<double>(a.c.size() + b.c.size() - 1, 0.0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

inline Laurent add(const Laurent& a, const Laurent& b) {
  const int lo = std::min(a.offset, b.offset);
  const int hi = std::max(a.offset + static_cast<int>(a.c.size()), b.offset + static_cast<int>(b.c.size()));
  Laurent out{lo, std::vector<double>(static_cast<std::size_t>(hi - lo), 0.0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[static_cast<std::size_t>(a.offset - lo) + i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[static_cast<std::size_t>(b.offset - lo) + i] += b.c[i];
  return out;
}

inline Laurent power(const Laurent& base, int n) {
  Laurent out{0, {1.0}};
  for (int i = 0; i < n; ++i) out = multiply(out, base);
  return out;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace detail

/// Spline biorthogonal pair. Primal symbol ((1+z)/2)^N starting at index 0;
/// dual symbol ((1+z)/2)^Nd * sum_{n<q} C(q-1+n, n) sin^{2n}(w/2), q = (N+Nd)/2,
/// placed so both filters share the same center (zero-delay PR).
inline FilterBank cdf_spline(int n_primal, int n_dual) {
  if (n_primal < 1 || n_dual < 1) throw Error(ErrorCode::InvalidArgument, "cdf_spline orders must be >= 1");
  if ((n_primal + n_dual) % 2 != 0) throw Error(ErrorCode::BadParity, "cdf_spline needs N + Nd even");
  const int q = (n_primal + n_dual) / 2;
  const detail::Laurent half_sum{0, {0.5, 0.5}};
  const detail::Laurent sin_sq{-1, {-0.25, 0.5, -0.25}};  // sin^2(w/2) = (2 - z - 1/z) / 4

  const detail::Laurent primal = detail::power(half_sum, n_primal);

  detail::Laurent poly{0, {0.0}};
  for (int n = 0; n < q; ++n) {
    detail::Laurent term = detail::power(sin_sq, n);
    for (double& c : term.c) c *= detail::binomial(q - 1 + n, n);
    poly = detail::add(poly, term);
  }
  detail::Laurent dual = detail::multiply(detail::power(half_sum, n_dual), poly);
  dual.offset += (n_primal - n_dual) / 2;

  const std::string name = "cdf_spline(" + std::to_string(n_primal) + "," + std::to_string(n_dual) + ")";
  return FilterBank(name, normalize(Filter(primal.offset, primal.c)), normalize(Filter(dual.offset, dual.c)));
}

/// Orthonormal Daubechies bank with p vanishing moments (length 2p), from the
/// bundled records. The data is validated on every load.
inline FilterBank daubechies(int p) {
  if (p < 2 || p > 4) throw Error(ErrorCode::UnknownOrder, "daubechies order must be 2, 3 or 4");
  const std::string name = "daubechies(" + std::to_string(p) + ")";
  for (const auto& rec : parse_coefficient_records(kDaubechiesRecords)) {
    if (rec.name != name) continue;
    const Filter h = normalize(rec.filter);
    FilterBank bank(name, h, h);
    if (pr_residual(bank) >= kPerfectReconstructionTol) {
      throw Error(ErrorCode::NotPerfectReconstruction, "bundled " + name + " fails the PR check");
    }
    if (root_multiplicity(h, RootPoint::MinusOne) != p || h.size() != static_cast<std::size_t>(2 * p)) {
      throw Error(ErrorCode::ParseError, "bundled " + name + " has the wrong zero count or length");
    }
    return bank;
  }
  throw Error(ErrorCode::UnknownOrder, "no bundled record for " + name);
}

/// A named starting family: haar, cdf_spline(N, Nd) or daubechies(p).
struct FamilySpec {
  enum class Kind { Haar, CdfSpline, Daubechies };
  Kind kind = Kind::Haar;
  int first = 0;   // N or p
  int second = 0;  // Nd

  std::string label() const {
    switch (kind) {
      case Kind::Haar: return "haar";
      case Kind::CdfSpline: return "cdf_spline(" + std::to_string(first) + "," + std::to_string(second) + ")";
      case Kind::Daubechies: return "daubechies(" + std::to_string(first) + ")";
    }
    return "";
  }

  /// Short reference accepted on the command line.
  std::string reference() const {
    switch (kind) {
      case Kind::Haar: return "haar";
      case Kind::CdfSpline: return "cdf:" + std::to_string(first) + "," + std::to_string(second);
      case Kind::Daubechies: return "db:" + std::to_string(first);
    }
    return "";
  }

  FilterBank make() const {
    switch (kind) {
      case Kind::Haar: return haar();
      case Kind::CdfSpline: return cdf_spline(first, second);
      case Kind::Daubechies: return daubechies(first);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family kind");
  }
};

/// The families offered by `wavetool list`.
inline std::vector<FamilySpec> builtin_families() {
  std::vector<FamilySpec> out{{FamilySpec::Kind::Haar, 0, 0}};
  // N + Nd <= 8 keeps every admissible elevation at spline order <= 8, whose
  // lower Riesz bound stays above 1e-3 (order 9 drops to about 6e-4).
  for (int n = 1; n <= 7; ++n) {
    for (int nd = 1; n + nd <= 8; ++nd) {
      if ((n + nd) % 2 == 0) out.push_back({FamilySpec::Kind::CdfSpline, n, nd});
    }
  }
  for (int p = 2; p <= 4; ++p) out.push_back({FamilySpec::Kind::Daubechies, p, 0});
  return out;
}

namespace detail {

inline std::optional<std::vector<int>> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (part.empty() || part.size() > 4) return std::nullopt;
    int v = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9') return std::nullopt;
      v = v * 10 + (ch - '0');
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses `haar`, `cdf:N,Nd`, `db:p`, `cdf_spline(N,Nd)` or `daubechies(p)`.
inline std::optional<FamilySpec> parse_family(std::string_view text) {
  auto args_of = [&](std::string_view prefix, std::string_view suffix) -> std::optional<std::vector<int>> {
    if (text.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    if (text.substr(text.size() - suffix.size()) != suffix) return std::nullopt;
    return detail::parse_int_list(text.substr(prefix.size(), text.size() - prefix.size() - suffix.size()));
  };
  if (text == "haar") return FamilySpec{FamilySpec::Kind::Haar, 0, 0};
  for (auto [prefix, suffix] : {std::pair<std::string_view, std::string_view>{"cdf:", ""}, {"cdf_spline(", ")"}}) {
    if (auto args = args_of(prefix, suffix); args && args->size() == 2) {
      return FamilySpec{FamilySpec::Kind::CdfSpline, (*args)[0], (*args)[1]};
    }
  }
  for (auto [prefix, suffix] : {std::pair<std::string_view, std::string_view>{"db:", ""}, {"daubechies(", ")"}}) {
    if (auto args = args_of(prefix, suffix); args && args->size() == 1) {
      return FamilySpec{FamilySpec::Kind::Daubechies, (*args)[0], 0};
    }
  }
  return std::nullopt;
}

}  // namespace wavelift

#endif  // WAVELIFT_FAMILIES_HPP
