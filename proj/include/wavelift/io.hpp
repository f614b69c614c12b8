#ifndef WAVELIFT_IO_HPP
#define WAVELIFT_IO_HPP

// Serialization: filter-bank JSON documents, plot-ready CSV samples and the
// verification report.
//
// Bank JSON schema:
//   { "name": str, "convention": {"lowpass_sum": 1},
//     "primal": {"offset": int, "coeffs": [real]}, "dual": {...} }
// Coefficients are written with 17 significant digits, so save -> load -> save
// is byte-identical for normalized banks.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "wavelift/cascade.hpp"
#include "wavelift/error.hpp"
#include "wavelift/families.hpp"
#include "wavelift/filter.hpp"
#include "wavelift/spectral.hpp"

namespace wavelift {

/// Locale-independent decimal with 17 significant digits.
inline std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

/// Shortest round-trip decimal; exact for dyadic grid abscissae.
inline std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace detail {

inline void write_filter_json(std::ostream& out, const Filter& f) {
  out << "{\"offset\": " << f.offset() << ", \"coeffs\": [";
  const auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out << (i == 0 ? "" : ", ") << format_real(c[i]);
  out << "]}";
}

inline Filter read_filter_json(const nlohmann::json& node, std::string_view side) {
  if (!node.is_object() || !node.contains("offset") || !node.contains("coeffs")) {
    throw Error(ErrorCode::ParseError, "missing \"" + std::string(side) + "\" filter object");
  }
  const auto& offset = node.at("offset");
  const auto& coeffs = node.at("coeffs");
  if (!offset.is_number_integer() || !coeffs.is_array() || coeffs.empty()) {
    throw Error(ErrorCode::ParseError, "malformed \"" + std::string(side) + "\" filter");
  }
  std::vector<double> taps;
  for (const auto& c : coeffs) {
    if (!c.is_number()) throw Error(ErrorCode::ParseError, "non-numeric coefficient");
    taps.push_back(c.get<double>());
  }
  Filter f(offset.get<int>(), std::move(taps));
  // Ingested filters are rescaled to sum 1; already normalized ones are kept bit-exact.
  return is_normalized(f) ? f : normalize(f);
}

}  // namespace detail

inline std::string bank_to_json(const FilterBank& bank) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << nlohmann::json(bank.name()).dump() << ",\n";
  out << "  \"convention\": {\"lowpass_sum\": 1},\n";
  out << "  \"primal\": ";
  detail::write_filter_json(out, bank.primal());
  out << ",\n  \"dual\": ";
  detail::write_filter_json(out, bank.dual());
  out << "\n}\n";
  return out.str();
}

inline FilterBank bank_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "bank document must be a JSON object");
  std::string name = "bank";
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw Error(ErrorCode::ParseError, "\"name\" must be a string");
    name = doc.at("name").get<std::string>();
  }
  if (!doc.contains("primal") || !doc.contains("dual")) {
    throw Error(ErrorCode::ParseError, "bank document needs \"primal\" and \"dual\"");
  }
  return FilterBank(name, detail::read_filter_json(doc.at("primal"), "primal"),
                    detail::read_filter_json(doc.at("dual"), "dual"));
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, "write to '" + path + "' failed");
}

/// A bank reference is a family spec (`haar`, `cdf:4,4`, `db:4`, ...) or a JSON path.
inline FilterBank resolve_bank(const std::string& ref) {
  if (auto spec = parse_family(ref)) return spec->make();
  return bank_from_json(read_text_file(ref));
}

// ---------------------------------------------------------------------------
// Verification report

struct RieszBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool non_riesz = false;
  bool diverging = false;
};

struct VerifyReport {
  double pr_residual = 0.0;
  int primal_multiplicity = 0;
  int dual_multiplicity = 0;
  int primal_vanishing_moments = 0;  // zeros of g at z = +1
  int dual_vanishing_moments = 0;
  Support primal_support{0, 0};
  Support dual_support{0, 0};
  Symmetry primal_symmetry;
  Symmetry dual_symmetry;
  RieszBounds riesz_primal;
  RieszBounds riesz_dual;
  double orthonormal_deviation = 0.0;
  std::vector<std::string> warnings;

  bool passed() const noexcept {
    return pr_residual < kPerfectReconstructionTol && !riesz_primal.non_riesz && !riesz_dual.non_riesz;
  }
};

inline RieszBounds riesz_bounds(const Filter& f) {
  const auto profile = gamma(f);
  return {profile.lower_bound, profile.upper_bound, profile.non_riesz, profile.diverging};
}

inline VerifyReport verify(const FilterBank& bank) {
  VerifyReport r;
  r.pr_residual = pr_residual(bank);
  r.primal_multiplicity = root_multiplicity(bank.primal(), RootPoint::MinusOne);
  r.dual_multiplicity = root_multiplicity(bank.dual(), RootPoint::MinusOne);
  const auto hp = derive_highpass(bank);
  r.primal_vanishing_moments = root_multiplicity(hp.primal, RootPoint::PlusOne);
  r.dual_vanishing_moments = root_multiplicity(hp.dual, RootPoint::PlusOne);
  r.primal_support = support(bank.primal());
  r.dual_support = support(bank.dual());
  r.primal_symmetry = symmetry_type(bank.primal());
  r.dual_symmetry = symmetry_type(bank.dual());
  r.riesz_primal = riesz_bounds(bank.primal());
  r.riesz_dual = riesz_bounds(bank.dual());
  r.orthonormal_deviation = orthonormality_deviation(bank.primal());
  if (bank.degenerate_dual()) r.warnings.emplace_back("DegenerateDual");
  if (r.riesz_primal.non_riesz) r.warnings.emplace_back("NonRiesz(primal)");
  if (r.riesz_dual.non_riesz) r.warnings.emplace_back("NonRiesz(dual)");
  // Unbounded B means the generator is not in L^2; reported, but A alone decides NonRiesz.
  if (r.riesz_primal.diverging && !r.riesz_primal.non_riesz) r.warnings.emplace_back("GammaDiverges(primal)");
  if (r.riesz_dual.diverging && !r.riesz_dual.non_riesz) r.warnings.emplace_back("GammaDiverges(dual)");
  if (r.pr_residual >= kPerfectReconstructionTol) r.warnings.emplace_back("NotPerfectReconstruction");
  return r;
}

inline nlohmann::json to_json(const VerifyReport& r, const std::string& name) {
  auto symmetry = [](const Symmetry& s) {
    nlohmann::json j{{"class", to_string(s.kind)}};
    if (s.kind != Symmetry::Kind::None) j["center"] = s.center();
    return j;
  };
  auto riesz = [](const RieszBounds& b) -> nlohmann::json {
    if (!std::isfinite(b.lower) || !std::isfinite(b.upper)) return "NonRiesz";
    return {{"A", b.lower}, {"B", b.upper}, {"non_riesz", b.non_riesz}, {"upper_bound_diverges", b.diverging}};
  };
  return {
      {"name", name},
      {"pr_residual", r.pr_residual},
      {"primal_multiplicity", r.primal_multiplicity},
      {"dual_multiplicity", r.dual_multiplicity},
      {"primal_vanishing_moments", r.primal_vanishing_moments},
      {"dual_vanishing_moments", r.dual_vanishing_moments},
      {"primal_support", {r.primal_support.first, r.primal_support.last}},
      {"dual_support", {r.dual_support.first, r.dual_support.last}},
      {"symmetry", {{"primal", symmetry(r.primal_symmetry)}, {"dual", symmetry(r.dual_symmetry)}}},
      {"riesz_primal", riesz(r.riesz_primal)},
      {"riesz_dual", riesz(r.riesz_dual)},
      {"orthonormal_deviation", r.orthonormal_deviation},
      {"warnings", r.warnings},
      {"passed", r.passed()},
  };
}

// ---------------------------------------------------------------------------
// Plot samples

struct RenderedBank {
  int level = 0;
  std::optional<SampledFunction> phi, phi_dual, psi, psi_dual;
  std::vector<std::string> warnings;
};

/// Samples phi, dual phi, psi and dual psi at step 2^-J. Degenerate duals are
/// left absent; a cascade that does not settle contributes its last iterate
/// and a warning.
inline RenderedBank render_bank(const FilterBank& bank, int level, int iterations = kDefaultCascadeIterations) {
  RenderedBank out;
  out.level = level;
  const auto hp = derive_highpass(bank);
  auto side = [&](const Filter& lowpass, const Filter& highpass, std::optional<SampledFunction>& phi,
                  std::optional<SampledFunction>& psi, const char* label) {
    try {
      CascadeStats stats;
      phi = cascade_scaling(lowpass, level, iterations, &stats, OnNoConvergence::Keep);
      if (!stats.converged_or_decreasing) {
        out.warnings.push_back(std::string(label) + ": NoConvergence: cascade samples are the last iterate");
      }
      psi = refine_highpass(*phi, highpass);
    } catch (const Error& e) {
      out.warnings.push_back(std::string(label) + ": " + e.what());
    }
  };
  side(bank.primal(), hp.primal, out.phi, out.psi, "primal");
  if (bank.degenerate_dual()) {
    out.warnings.emplace_back("DegenerateDual");
  } else {
    side(bank.dual(), hp.dual, out.phi_dual, out.psi_dual, "dual");
  }
  return out;
}

/// CSV with header `x,phi,phi_dual,psi,psi_dual` over the union of supports.
/// Present functions read 0 outside their support; absent ones are empty.
inline void write_render_csv(std::ostream& out, const RenderedBank& r) {
  const std::optional<SampledFunction>* columns[] = {&r.phi, &r.phi_dual, &r.psi, &r.psi_dual};
  long lo = std::numeric_limits<long>::max();
  long hi = std::numeric_limits<long>::min();
  for (const auto* col : columns) {
    if (*col) {
      lo = std::min(lo, (*col)->first());
      hi = std::max(hi, (*col)->last());
    }
  }
  out << "x,phi,phi_dual,psi,psi_dual\n";
  if (lo > hi) return;
  const double step = std::ldexp(1.0, -r.level);
  for (long i = lo; i <= hi; ++i) {
    out << format_shortest(static_cast<double>(i) * step);
    for (const auto* col : columns) {
      out << ',';
      if (*col) out << format_real((*col)->at(i));
    }
    out << '\n';
  }
}

}  // namespace wavelift

#endif  // WAVELIFT_IO_HPP
