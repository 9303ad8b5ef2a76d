#include <gtest/gtest.h>

#include "oracles.hpp"
#include "supertrop/error.hpp"
#include "test_util.hpp"

using namespace testutil;

TEST(Polynomial, TextFormRoundTrips) {
  EXPECT_EQ(to_string(P("2, 2, 0")), "2, 2, 0");
  EXPECT_EQ(to_string(P(" 5g ,4,  0 ")), "5g, 4, 0");
  EXPECT_EQ(P("1, -inf, -inf").degree(), 0u);
  EXPECT_TRUE(P("-inf").is_neg_inf());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng);
    EXPECT_EQ(parse_polynomial(to_string(f)), f);
  }
  EXPECT_THROW(parse_polynomial("1,,2"), error);
  EXPECT_THROW(parse_polynomial(""), error);
}

TEST(Polynomial, Eval) {
  EXPECT_EQ(eval(P("2, 2, 0"), E("0")), E("2g"));
  EXPECT_EQ(eval(P("2, 2, 0"), E("2")), E("4g"));
  EXPECT_EQ(eval(P("2, 2, 0"), E("1")), E("3"));
  EXPECT_EQ(eval(P("5g, 4, 0"), E("1")), E("5g"));
  EXPECT_EQ(eval(P("5g, 4, 0"), E("-inf")), E("5g"));
  EXPECT_EQ(eval(P("-inf, 4, 0"), E("-inf")), E("-inf"));
}

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(poly_mul(P("0, 0"), P("0, 0")), P("0, 0g, 0"));
  EXPECT_EQ(poly_pow(P("1, 0"), 1), P("1, 0"));
  EXPECT_EQ(poly_mul(P("2, 0"), P("3, 0")), P("5, 3, 0"));
  EXPECT_EQ(poly_add(P("1, 2"), P("1, 0, 7")), P("1g, 2, 7"));
  EXPECT_EQ(poly_pow(P("1, 0"), 0), P("0"));
}

TEST(Polynomial, Inflate) {
  EXPECT_EQ(inflate(P("5g, 4, 0"), 2), P("5g, -inf, 4, -inf, 0"));
  EXPECT_EQ(inflate(P("2, 2, 0"), 1), P("2, 2, 0"));
  EXPECT_EQ(inflate(P("3"), 7), P("3"));
  EXPECT_THROW(inflate(P("3"), 0), error);
}

TEST(Polynomial, Essential) {
  EXPECT_EQ(essential(P("2, 2, 0")), P("2, 2, 0"));
  EXPECT_EQ(essential(P("5, 0, 0")), P("5, -inf, 0"));
  EXPECT_EQ(essential(P("3g")), P("3g"));
  EXPECT_EQ(essential_exponents(P("5, 0, 0")), (std::vector<std::size_t>{0, 2}));
}

TEST(Polynomial, PolyGhostSurpasses) {
  EXPECT_TRUE(poly_ghost_surpasses(P("6g, 3g, 0"), P("5, 1g, 0")));
  EXPECT_TRUE(poly_ghost_surpasses(P("2, 2, 0"), P("2, 2, 0")));
  EXPECT_FALSE(poly_ghost_surpasses(P("2, 2, 0"), P("2, 4, 0")));
  EXPECT_TRUE(poly_ghost_surpasses(P("1g, 0"), P("-inf, 0")));
}

TEST(Polynomial, FunctionRelations) {
  // 4x^2 is never needed: the functions agree although the coefficients do not.
  const Polynomial f = P("4g, -inf, -inf, -inf, 4, -inf, 0");
  const Polynomial g = P("0g, -inf, 4, -inf, 4, -inf, 0");
  EXPECT_FALSE(poly_ghost_surpasses(f, g));
  EXPECT_TRUE(poly_fn_ghost_surpasses(f, g));
  EXPECT_FALSE(poly_fn_ghost_surpasses(g, f));
  EXPECT_TRUE(poly_fn_equal(P("5, 0, 0"), P("5, -inf, 0")));
  EXPECT_FALSE(poly_fn_equal(P("5, 0, 0"), P("5, 3, 0")));
}

TEST(Polynomial, Roots) {
  const RootSet a = roots(P("2, 2, 0"));
  EXPECT_EQ(a.corner, (std::vector<CornerRoot>{{E("0"), 1}, {E("2"), 1}}));
  EXPECT_TRUE(a.noncorner.empty());

  const RootSet b = roots(P("5g, 4, 0"));
  EXPECT_EQ(b.corner, (std::vector<CornerRoot>{{E("4"), 1}}));
  ASSERT_EQ(b.noncorner.size(), 1u);
  EXPECT_TRUE(b.noncorner[0].lo.is_neg_inf());
  EXPECT_EQ(b.noncorner[0].hi, E("1"));
  EXPECT_TRUE(b.contains(E("-inf")));
  EXPECT_TRUE(b.contains(E("1")));
  EXPECT_FALSE(b.contains(E("2")));

  EXPECT_EQ(roots(P("7/2, 0")).corner, (std::vector<CornerRoot>{{E("7/2"), 1}}));
  EXPECT_EQ(roots(P("6, -inf, 0")).corner, (std::vector<CornerRoot>{{E("3"), 2}}));
  EXPECT_EQ(roots(P("-inf, -inf, 1, 0")).neg_inf_multiplicity, 2u);
  EXPECT_THROW(roots(P("-inf")), error);
  EXPECT_THROW(b.contains(E("1g")), error);
}

TEST(Polynomial, GhostLeadingCoefficientGivesUnboundedInterval) {
  const RootSet r = roots(P("0, 1g"));
  ASSERT_EQ(r.noncorner.size(), 1u);
  EXPECT_EQ(r.noncorner[0].lo, E("-1"));
  EXPECT_FALSE(r.noncorner[0].hi.has_value());
  EXPECT_TRUE(r.corner.empty());
}

class PolynomialProperties : public ::testing::TestWithParam<int> {};

TEST_P(PolynomialProperties, EvalMatchesOracleAndIsAHomomorphism) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 100; ++i) {
    const Polynomial f = random_polynomial(rng), g = random_polynomial(rng), h = random_polynomial(rng);
    EXPECT_EQ(poly_mul(poly_mul(f, g), h), poly_mul(f, poly_mul(g, h)));
    EXPECT_EQ(poly_mul(f, g), poly_mul(g, f));
    for (const Rational& x : oracle::sample_points(f, g, 30)) {
      const Element xe = Element::tangible(x);
      EXPECT_EQ(eval(f, xe), oracle::eval(f, xe));
      EXPECT_EQ(eval(poly_mul(f, g), xe), eval(f, xe) * eval(g, xe));
      EXPECT_EQ(eval(poly_add(f, g), xe), eval(f, xe) + eval(g, xe));
    }
  }
}

TEST_P(PolynomialProperties, EssentialPreservesTheFunction) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 100);
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = random_polynomial(rng, 7);
    const Polynomial e = essential(f);
    EXPECT_EQ(essential_exponents(f), oracle::strictly_dominant_exponents(f)) << to_string(f);
    for (const Rational& x : oracle::sample_points(f, f, 100)) {
      const Element xe = Element::tangible(x);
      EXPECT_EQ(eval(e, xe), eval(f, xe)) << to_string(f) << " at " << xe;
    }
  }
}

TEST_P(PolynomialProperties, RootSetIsExactlyTheGhostLocus) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()) + 200);
  for (int i = 0; i < 200; ++i) {
    const Polynomial f = random_polynomial(rng, 6);
    if (f.is_neg_inf()) continue;
    const RootSet r = roots(f);
    for (const Rational& x : oracle::sample_points(f, f, 60)) {
      const Element xe = Element::tangible(x);
      EXPECT_EQ(r.contains(xe), !eval(f, xe).is_tangible()) << to_string(f) << " at " << xe;
    }
    EXPECT_EQ(r.contains(Element::neg_inf()), !f.coeff(0).is_tangible());
    for (std::size_t k = 1; k < r.corner.size(); ++k) {
      EXPECT_LT(r.corner[k - 1].value.value(), r.corner[k].value.value());
    }
    std::size_t total = r.neg_inf_multiplicity;
    for (const CornerRoot& c : r.corner) total += c.multiplicity;
    EXPECT_LE(total, f.degree());
    if (f.is_tangible()) EXPECT_EQ(total, f.degree()) << to_string(f);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PolynomialProperties, ::testing::Values(11, 12, 13));
