#ifndef WAVELIFT_CLI_HPP
#define WAVELIFT_CLI_HPP

// Command implementations behind the `wavetool` executable. Each returns the
// process exit code: 0 success, 1 usage/input error, 2 elevation not
// possible (NotDivisible/TooShort), 3 verification failed.

#include <ostream>
#include <sstream>
#include <string>

#include "wavelift/error.hpp"
#include "wavelift/families.hpp"
#include "wavelift/filter.hpp"
#include "wavelift/io.hpp"

namespace wavelift::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotElevatable = 2;
inline constexpr int kExitVerifyFailed = 3;

inline int cmd_list(std::ostream& out) {
  for (const auto& spec : builtin_families()) out << spec.label() << "  (" << spec.reference() << ")\n";
  return kExitOk;
}

inline int cmd_elevate(const std::string& ref, int s, const std::string& output, std::ostream& out,
                       std::ostream& err) {
  try {
    const auto bank = resolve_bank(ref);
    const auto elevated = elevate(bank, ElevationOrder(s));
    write_text_file(output, bank_to_json(elevated));
    if (elevated.degenerate_dual()) {
      err << "warning: DegenerateDual: reduced dual filter has length 1 (point mass)\n";
    }
    out << "wrote " << elevated.name() << " to " << output << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::NotDivisible || e.code() == ErrorCode::TooShort) return kExitNotElevatable;
    return kExitUsage;
  }
}

inline int cmd_verify(const std::string& ref, std::ostream& out, std::ostream& err) {
  try {
    const auto bank = resolve_bank(ref);
    const auto report = verify(bank);
    out << to_json(report, bank.name()).dump(2) << '\n';
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    return report.passed() ? kExitOk : kExitVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

inline int cmd_render(const std::string& ref, int level, const std::string& output, int s, std::ostream& out,
                      std::ostream& err) {
  try {
    auto bank = resolve_bank(ref);
    if (s > 0) bank = elevate(bank, ElevationOrder(s));
    const auto rendered = render_bank(bank, level);
    std::ostringstream csv;
    write_render_csv(csv, rendered);
    write_text_file(output, csv.str());
    for (const auto& w : rendered.warnings) err << "warning: " << w << '\n';
    out << "wrote samples of " << bank.name() << " to " << output << '\n';
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::NotDivisible || e.code() == ErrorCode::TooShort) return kExitNotElevatable;
    return kExitUsage;
  }
}

}  // namespace wavelift::cli

#endif  // WAVELIFT_CLI_HPP
