#include <gtest/gtest.h>

#include <sstream>

#include "wavelift/io.hpp"

using namespace wavelift;

TEST(BankJson, RoundTripIsByteIdentical) {
  for (const auto& spec : builtin_families()) {
    const auto bank = spec.make();
    const auto first = bank_to_json(bank);
    const auto loaded = bank_from_json(first);
    EXPECT_EQ(loaded, bank);
    EXPECT_EQ(bank_to_json(loaded), first) << spec.label();
  }
  const auto up = elevate(daubechies(4), ElevationOrder(2));
  EXPECT_EQ(bank_to_json(bank_from_json(bank_to_json(up))), bank_to_json(up));
}

TEST(BankJson, SchemaAndNormalization) {
  const auto doc = nlohmann::json::parse(bank_to_json(cdf_spline(2, 2)));
  EXPECT_EQ(doc["convention"]["lowpass_sum"], 1);
  EXPECT_EQ(doc["primal"]["offset"], 0);
  EXPECT_EQ(doc["primal"]["coeffs"].size(), 3u);

  const auto bank = bank_from_json(
      R"({"name": "raw", "primal": {"offset": 0, "coeffs": [1, 1]}, "dual": {"offset": 0, "coeffs": [2, 2]}})");
  EXPECT_DOUBLE_EQ(bank.primal()[0], 0.5);
  EXPECT_DOUBLE_EQ(bank.dual()[1], 0.5);
}

TEST(BankJson, Malformed) {
  EXPECT_THROW(bank_from_json("{"), Error);
  EXPECT_THROW(bank_from_json(R"({"primal": {"offset": 0, "coeffs": [1]}})"), Error);
  EXPECT_THROW(bank_from_json(R"({"primal": {"offset": 0.5, "coeffs": [1]}, "dual": {"offset": 0, "coeffs": [1]}})"),
               Error);
  EXPECT_THROW(bank_from_json(R"({"primal": {"offset": 0, "coeffs": ["a"]}, "dual": {"offset": 0, "coeffs": [1]}})"),
               Error);
}

TEST(FormatReal, SeventeenDigitsAndDotSeparator) {
  EXPECT_EQ(format_real(0.125), "0.125");
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
  EXPECT_EQ(format_shortest(0.0625), "0.0625");
}

TEST(Verify, CdfFourFourPasses) {
  const auto r = verify(cdf_spline(4, 4));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.dual_multiplicity, 4);
  EXPECT_EQ(r.primal_multiplicity, 4);
  EXPECT_GT(r.riesz_primal.lower, 1e-3);
  EXPECT_GT(r.riesz_dual.lower, 1e-3);
}

TEST(Verify, DegenerateDualFails) {
  const auto r = verify(elevate(haar(), ElevationOrder(1)));
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.riesz_dual.non_riesz);
  EXPECT_NE(std::find(r.warnings.begin(), r.warnings.end(), "DegenerateDual"), r.warnings.end());
  const auto j = to_json(r, "x");
  EXPECT_EQ(j["riesz_dual"], "NonRiesz");
}

TEST(Verify, HaarIsOrthonormal) {
  const auto r = verify(haar());
  EXPECT_TRUE(r.passed());
  EXPECT_LT(r.orthonormal_deviation, 1e-12);
  EXPECT_EQ(r.primal_vanishing_moments, 1);
}

TEST(Render, HaarCsvContract) {
  std::ostringstream out;
  write_render_csv(out, render_bank(haar(), 4));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,phi,phi_dual,psi,psi_dual");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
    if (rows > 1 && rows < 17) {
      EXPECT_EQ(line.substr(line.find(',') + 1, 2), "1,");
    }
  }
  EXPECT_EQ(rows, 17);
}

TEST(Render, DegenerateDualLeavesColumnsEmpty) {
  const auto r = render_bank(elevate(haar(), ElevationOrder(1)), 3);
  EXPECT_TRUE(r.phi && r.psi);
  EXPECT_FALSE(r.phi_dual || r.psi_dual);
  std::ostringstream out;
  write_render_csv(out, r);
  EXPECT_NE(out.str().find("\n0.5,0.5,,"), std::string::npos);
}
