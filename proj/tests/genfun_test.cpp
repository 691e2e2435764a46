#include <gtest/gtest.h>

#include "cfc/pipeline.hpp"

namespace cfc {
namespace {

CountSeries series(std::initializer_list<int> xs) {
  CountSeries s;
  for (int x : xs) s.coeffs.emplace_back(x);
  return s;
}

std::vector<BigInt> poly(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST(FindRecurrence, EventuallyConstant) {
  const auto rec = find_recurrence(series({1, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(rec.connection, (std::vector<Rational>{1, -1}));
}

TEST(FindRecurrence, Fibonacci) {
  const auto rec = find_recurrence(series({1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
  EXPECT_EQ(rec.connection, (std::vector<Rational>{1, -1, -1}));
  EXPECT_EQ(rec.length, 2u);
}

TEST(FindRecurrence, Polynomial) {
  const auto rec = find_recurrence(series({1, 2, 2, 0, 0, 0, 0}));
  EXPECT_EQ(rec.connection, (std::vector<Rational>{1}));
  EXPECT_EQ(rec.length, 3u);
}

TEST(FindRecurrence, ZeroSeries) {
  const auto rec = find_recurrence(series({0, 0, 0, 0}));
  EXPECT_EQ(rec.length, 0u);
}

TEST(ToRational, GeometricIdentity) {
  const auto f = to_rational(series({1, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(f.num, poly({1, 1}));
  EXPECT_EQ(f.den, poly({1, -1}));
  EXPECT_EQ(format_rational(f), "(1 + x)/(1 - x)");
}

TEST(ToRational, PolynomialSeries) {
  const auto f = to_rational(series({1, 2, 2, 0, 2, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(f.num, poly({1, 2, 2, 0, 2}));
  EXPECT_EQ(f.den, poly({1}));
  EXPECT_EQ(format_rational(f), "1 + 2x + 2x^2 + 2x^4");
}

TEST(ToRational, ZeroAndConstant) {
  EXPECT_EQ(format_rational(to_rational(series({0, 0, 0}))), "0");
  EXPECT_EQ(format_rational(to_rational(series({1, 0, 0, 0}))), "1");
}

TEST(ToRational, ReexpansionMatches) {
  const auto s = series({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144});
  const auto f = to_rational(s);
  EXPECT_EQ(expand(f, s.coeffs.size()), s.coeffs);
  EXPECT_EQ(expand(f, 14)[13], BigInt(377));
}

TEST(ToRational, RejectsInconsistentRecurrence) {
  LinearRecurrence bad;
  bad.length = 1;
  bad.connection = {1, -1};
  EXPECT_THROW(to_rational(series({1, 2, 3, 4}), bad), invariant_error);
}

TEST(FormatPolynomial, Signs) {
  EXPECT_EQ(format_polynomial(poly({1, 2, 0, -1})), "1 + 2x - x^3");
  EXPECT_EQ(format_polynomial(poly({0, -3})), "-3x");
  EXPECT_EQ(format_polynomial(poly({})), "0");
}

TEST(CountByLength, A1AndA2) {
  const auto a1 = element_automaton(parse_system("A1"));
  EXPECT_EQ(count_by_length(a1, 3).coeffs, poly({1, 1, 0, 0}));
  const auto a2 = element_automaton(parse_system("A2"));
  EXPECT_EQ(count_by_length(a2, 4).coeffs, poly({1, 2, 2, 0, 0}));
}

TEST(CountByLength, MinimizeInvariant) {
  for (const char* name : {"A3", "A4", "B3", "I2:7", "tA2", "tA3"}) {
    const auto raw = build_stage(parse_system(name), Stage::pipeline);
    EXPECT_EQ(count_by_length(minimize(raw), 12), count_by_length(raw, 12)) << name;
  }
}

TEST(CountByLength, DiagramFlipInvariance) {
  const auto a3 = parse_system("A3");
  std::vector<std::vector<unsigned>> flipped(3, std::vector<unsigned>(3));
  for (Generator i = 0; i < 3; ++i) {
    for (Generator j = 0; j < 3; ++j) flipped[i][j] = a3.m(2 - i, 2 - j);
  }
  const CoxeterSystem b(flipped);
  for (auto mode : {AcceptMode::cfc, AcceptMode::fc}) {
    PipelineOptions opt;
    opt.mode = mode;
    EXPECT_EQ(count_by_length(element_automaton(a3, opt), 12), count_by_length(element_automaton(b, opt), 12));
  }
}

TEST(GeneratingFunction, ClosedForms) {
  EXPECT_EQ(format_rational(generating_function(element_automaton(parse_system("A2"))).gf), "1 + 2x + 2x^2");
  EXPECT_EQ(format_rational(generating_function(element_automaton(parse_system("I2:5"))).gf),
            "1 + 2x + 2x^2 + 2x^4");
  PipelineOptions fc;
  fc.mode = AcceptMode::fc;
  EXPECT_EQ(format_rational(generating_function(element_automaton(parse_system("tA1"), fc)).gf), "(1 + x)/(1 - x)");
  EXPECT_EQ(format_rational(generating_function(element_automaton(parse_system("tA1"))).gf),
            "(1 + 2x + x^2 - 2x^3)/(1 - x^2)");
}

TEST(GeneratingFunction, NormalizedDenominator) {
  for (const char* name : {"A3", "B3", "tA2", "tA3", "I2:6"}) {
    const auto g = generating_function(element_automaton(parse_system(name)));
    ASSERT_FALSE(g.gf.den.empty());
    EXPECT_EQ(g.gf.den[0], 1);
    EXPECT_EQ(expand(g.gf, 3 * g.automaton_states), count_by_length(element_automaton(parse_system(name)),
                                                                     3 * g.automaton_states - 1)
                                                        .coeffs)
        << name;
  }
}

TEST(SeriesJson, BigIntegersAsStrings) {
  const auto s = series({1, 2, 3});
  const auto doc = series_json(s);
  EXPECT_EQ(doc["coeffs"], nlohmann::json::array({"1", "2", "3"}));
}

}  // namespace
}  // namespace cfc
