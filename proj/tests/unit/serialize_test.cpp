#include <gtest/gtest.h>

#include <json.hpp>

#include "susy/serialize.hpp"

namespace susy {
namespace {

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(240.25), "240.25");
  EXPECT_EQ(format_number(-15.0), "-15");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(1e-9), "1e-09");
}

TEST(SpectrumJson, SchemaAndValues) {
  const auto doc = nlohmann::json::parse(spectrum_json(full_spectrum(make_params(7.0, 0.5))));
  for (const char* key : {"B", "p", "A", "n_max", "asymptote", "levels"}) EXPECT_TRUE(doc.contains(key)) << key;
  EXPECT_EQ(doc["n_max"], 7);
  EXPECT_DOUBLE_EQ(doc["asymptote"].get<double>(), 240.25);
  EXPECT_EQ(doc["asymptote_exact"], "961/4");
  EXPECT_DOUBLE_EQ(doc["A"].get<double>(), 22.5);
  ASSERT_EQ(doc["levels"].size(), 8u);
  EXPECT_EQ(doc["levels"][7]["n"], 7);
  EXPECT_DOUBLE_EQ(doc["levels"][7]["E"].get<double>(), 238.0);
  EXPECT_EQ(doc["levels"][7]["E_exact"], "238");
}

TEST(SpectrumCsv, HeaderAndRows) {
  const std::string csv = spectrum_csv(full_spectrum(make_params(7.0, 0.5)));
  EXPECT_EQ(csv, "n,E\n0,0\n1,58\n2,108\n3,150\n4,184\n5,210\n6,228\n7,238\n");
}

TEST(FormJson, ExactCoefficients) {
  const ModelParams params = make_params(7.0, 0.5);
  const auto doc = nlohmann::json::parse(form_json(eigenfunction(1, params)));
  EXPECT_EQ(doc["sigma"], nlohmann::json::array({-15, 1}));
  EXPECT_EQ(doc["tau"], nlohmann::json::array({14, 1}));
  EXPECT_EQ(doc["p"], nlohmann::json::array({1, 2}));
  EXPECT_EQ(doc["coeffs"], nlohmann::json::parse("[[0,1],[-29,1],[29,2]]"));
  EXPECT_DOUBLE_EQ(doc["decay_exponent"].get<double>(), -13.5);
}

TEST(FormJson, LargeIntegersFallBackToStrings) {
  HyperbolicForm form{Rational(1), Rational(1), Rational(1),
                      {Rational(boost::multiprecision::cpp_int(1) << 80, 3)}, 1};
  const auto doc = nlohmann::json::parse(form_json(form));
  EXPECT_TRUE(doc["coeffs"][0][0].is_string());
  EXPECT_EQ(doc["coeffs"][0][1], 3);
}

TEST(MinimumJson, ReportsBothProbes) {
  const auto doc = nlohmann::json::parse(minimum_json(find_minimum(make_params(7.0, 0.5))));
  EXPECT_LT(doc["V_min"].get<double>(), 0.0);
  EXPECT_TRUE(doc["poly_root_probe"].contains("t_exp_p_x0"));
  EXPECT_TRUE(doc["poly_root_probe"].contains("t_exp_x0"));
}

}  // namespace
}  // namespace susy
