#include <gtest/gtest.h>

#include <sstream>

#include "wavelift/cli.hpp"

using namespace wavelift;

namespace {

std::string scratch(const std::string& name) { return std::string(WAVELIFT_SCRATCH_DIR) + "/" + name; }

}  // namespace

TEST(CliList, NamesFamilies) {
  std::ostringstream out;
  EXPECT_EQ(cli::cmd_list(out), 0);
  for (const char* name : {"haar", "cdf_spline(4,4)", "daubechies(4)"}) {
    EXPECT_NE(out.str().find(name), std::string::npos) << name;
  }
}

TEST(CliElevate, WritesElevatedBank) {
  std::ostringstream out, err;
  const auto path = scratch("cdf22_s1.json");
  ASSERT_EQ(cli::cmd_elevate("cdf:2,2", 1, path, out, err), 0) << err.str();
  const auto bank = bank_from_json(read_text_file(path));
  const std::vector<double> expected{0.125, 0.375, 0.375, 0.125};
  ASSERT_EQ(bank.primal().size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(bank.primal().coeffs()[i], expected[i]);
}

TEST(CliElevate, NotDivisibleExitsTwo) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_elevate("haar", 5, scratch("never.json"), out, err), 2);
  EXPECT_NE(err.str().find("NotDivisible"), std::string::npos);
}

TEST(CliElevate, OrderZeroCopiesInput) {
  std::ostringstream out, err;
  const auto path = scratch("db4_s0.json");
  ASSERT_EQ(cli::cmd_elevate("db:4", 0, path, out, err), 0);
  EXPECT_EQ(read_text_file(path), bank_to_json(daubechies(4)));
}

TEST(CliElevate, DegenerateDualWarnsButSucceeds) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_elevate("haar", 1, scratch("haar_s1.json"), out, err), 0);
  EXPECT_NE(err.str().find("DegenerateDual"), std::string::npos);
}

TEST(CliElevate, UnknownReferenceIsUsageError) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_elevate("no_such_bank.json", 1, scratch("x.json"), out, err), 1);
}

TEST(CliVerify, ExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_verify("cdf:4,4", out, err), 0);
  const auto report = nlohmann::json::parse(out.str());
  EXPECT_EQ(report["dual_multiplicity"], 4);

  std::ostringstream out2, err2;
  EXPECT_EQ(cli::cmd_verify("haar", out2, err2), 0);
  EXPECT_LT(nlohmann::json::parse(out2.str())["orthonormal_deviation"].get<double>(), 1e-12);

  std::ostringstream o, e;
  ASSERT_EQ(cli::cmd_elevate("haar", 1, scratch("haar_up.json"), o, e), 0);
  std::ostringstream out3, err3;
  EXPECT_EQ(cli::cmd_verify(scratch("haar_up.json"), out3, err3), 3);
  EXPECT_EQ(nlohmann::json::parse(out3.str())["passed"], false);
}

TEST(CliRender, HaarRows) {
  std::ostringstream out, err;
  const auto path = scratch("haar_J4.csv");
  ASSERT_EQ(cli::cmd_render("haar", 4, path, 0, out, err), 0);
  const auto text = read_text_file(path);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 18);
}

TEST(CliRender, Deterministic) {
  std::ostringstream o1, e1, o2, e2;
  ASSERT_EQ(cli::cmd_render("db:2", 5, scratch("a.csv"), 1, o1, e1), 0);
  ASSERT_EQ(cli::cmd_render("db:2", 5, scratch("b.csv"), 1, o2, e2), 0);
  EXPECT_EQ(read_text_file(scratch("a.csv")), read_text_file(scratch("b.csv")));
}
