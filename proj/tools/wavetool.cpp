#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wavelift/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wavetool: elevate and verify biorthogonal wavelet filter banks"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List built-in filter bank families");

  std::string bank;
  int order = 0;
  std::string output;
  auto* elevate = app.add_subcommand("elevate", "Elevate a bank by order s and write it as JSON");
  elevate->add_option("bank", bank, "Family spec (haar, cdf:N,Nd, db:p) or bank JSON file")->required();
  elevate->add_option("-s,--order", order, "Elevation order s")->required()->check(CLI::NonNegativeNumber);
  elevate->add_option("-o,--output", output, "Output JSON path")->required();

  auto* verify = app.add_subcommand("verify", "Print a verification report for a bank");
  verify->add_option("bank", bank, "Family spec or bank JSON file")->required();

  int level = 8;
  auto* render = app.add_subcommand("render", "Write phi, dual phi, psi, dual psi samples as CSV");
  render->add_option("bank", bank, "Family spec or bank JSON file")->required();
  render->add_option("-J,--level", level, "Dyadic resolution (step 2^-J)")->required()->check(CLI::Range(1, 16));
  render->add_option("-o,--output", output, "Output CSV path")->required();
  render->add_option("-s,--order", order, "Elevate by this order before sampling")->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  namespace cli = wavelift::cli;
  if (*list) return cli::cmd_list(std::cout);
  if (*elevate) return cli::cmd_elevate(bank, order, output, std::cout, std::cerr);
  if (*verify) return cli::cmd_verify(bank, std::cout, std::cerr);
  if (*render) return cli::cmd_render(bank, level, output, order, std::cout, std::cerr);
  return cli::kExitUsage;
}
