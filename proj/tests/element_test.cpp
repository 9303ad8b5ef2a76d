#include <gtest/gtest.h>

#include <random>

#include "supertrop/error.hpp"
#include "test_util.hpp"

using namespace testutil;

TEST(Element, AddTakesMaxAndGhostifiesTies) {
  EXPECT_EQ(E("2") + E("3"), E("3"));
  EXPECT_EQ(E("3") + E("3"), E("3g"));
  EXPECT_EQ(E("3g") + E("3"), E("3g"));
  EXPECT_EQ(E("-inf") + E("5g"), E("5g"));
  EXPECT_EQ(E("4") + E("3g"), E("4"));
}

TEST(Element, MulAddsValuesWithGhostIdealAndAbsorbingZero) {
  EXPECT_EQ(E("2") * E("3"), E("5"));
  EXPECT_EQ(E("2g") * E("3"), E("5g"));
  EXPECT_EQ(E("-inf") * E("3g"), E("-inf"));
  EXPECT_EQ(E("1/2") * E("-1/3"), E("1/6"));
}

TEST(Element, NuAndHat) {
  EXPECT_EQ(nu(E("3")), E("3g"));
  EXPECT_EQ(nu(E("-inf")), E("-inf"));
  EXPECT_EQ(hat(E("3g")), E("3"));
  EXPECT_EQ(hat(nu(E("5"))), E("5"));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Element a = random_element(rng);
    EXPECT_EQ(nu(nu(a)), nu(a));
    EXPECT_EQ(hat(hat(a)), hat(a));
    EXPECT_EQ(nu(hat(a)), nu(a));
  }
}

TEST(Element, GhostSurpasses) {
  EXPECT_TRUE(ghost_surpasses(E("3g"), E("2")));
  EXPECT_TRUE(ghost_surpasses(E("3"), E("3")));
  EXPECT_FALSE(ghost_surpasses(E("2"), E("3")));
  EXPECT_FALSE(ghost_surpasses(E("3g"), E("4")));
  EXPECT_TRUE(ghost_surpasses(E("2g"), E("-inf")));
  EXPECT_TRUE(ghost_surpasses(E("-inf"), E("-inf")));
  EXPECT_FALSE(ghost_surpasses(E("3"), E("2")));
  EXPECT_TRUE(ghost_surpasses(E("3g"), E("3g")));
  EXPECT_FALSE(ghost_surpasses(E("-inf"), E("1")));
}

TEST(Element, NuEquiv) {
  EXPECT_TRUE(nu_equiv(E("3"), E("3g")));
  EXPECT_TRUE(nu_equiv(E("-inf"), E("-inf")));
  EXPECT_FALSE(nu_equiv(E("2"), E("3")));
}

TEST(Element, Invert) {
  EXPECT_EQ(invert(E("6")), E("-6"));
  EXPECT_EQ(invert(E("0")), E("0"));
  EXPECT_EQ(E("7/3") * invert(E("7/3")), Element::one());
  try {
    invert(E("3g"));
    FAIL() << "ghost inverted";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_invertible);
  }
  EXPECT_THROW(invert(E("-inf")), error);
}

TEST(Element, KthRoot) {
  EXPECT_EQ(kth_root(E("6"), 2), E("3"));
  EXPECT_EQ(kth_root(E("-3"), 2), E("-3/2"));
  EXPECT_EQ(E("-3/2") * E("-3/2"), E("-3"));
  EXPECT_EQ(kth_root(E("-inf"), 5), E("-inf"));
  EXPECT_EQ(kth_root(E("5g"), 2), E("5/2g"));
  for (std::int64_t k = 1; k <= 6; ++k) {
    for (const char* a : {"7", "-11/3", "0"}) EXPECT_EQ(power(kth_root(E(a), k), k), E(a));
  }
}

TEST(Element, PowerZeroIsOne) {
  EXPECT_EQ(power(E("-inf"), 0), Element::one());
  EXPECT_EQ(power(E("4g"), 0), Element::one());
  EXPECT_EQ(power(E("4g"), 2), E("8g"));
}

TEST(Element, ParsePrintRoundTrip) {
  for (const char* s : {"-inf", "3", "-1/2", "5g", "0", "-7/3g", "123456789"}) {
    EXPECT_EQ(to_string(E(s)), s);
  }
  EXPECT_EQ(E("2/4"), E("1/2"));
  EXPECT_EQ(to_string(E("-0")), "0");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Element a = random_element(rng);
    EXPECT_EQ(parse_element(to_string(a)), a);
  }
}

TEST(Element, ParseRejectsMalformed) {
  for (const char* s : {"", "g", "1/0", "3gg", "abc", "1.5", "- 3", "inf", "3 g", "1/-2", "99999999999999999999"}) {
    try {
      parse_element(s);
      ADD_FAILURE() << "accepted '" << s << "'";
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::parse_error) << s;
    }
  }
}

class SemiringLaws : public ::testing::TestWithParam<int> {};

TEST_P(SemiringLaws, HoldOnSampledTriples) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  for (int i = 0; i < 500; ++i) {
    const Element a = random_element(rng), b = random_element(rng), c = random_element(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + a, nu(a));
    EXPECT_EQ(a + Element::zero(), a);
    EXPECT_EQ(a * Element::one(), a);
    EXPECT_EQ(nu(a + b), nu(a) + nu(b));
    EXPECT_EQ(nu(a * b), nu(a) * nu(b));

    EXPECT_TRUE(ghost_surpasses(a, a));
    if (ghost_surpasses(a, b) && ghost_surpasses(b, c)) EXPECT_TRUE(ghost_surpasses(a, c));
    if (ghost_surpasses(a, b) && ghost_surpasses(b, a)) EXPECT_EQ(a, b);
    if (ghost_surpasses(a, b)) EXPECT_TRUE(ghost_surpasses(a * c, b * c));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SemiringLaws, ::testing::Values(1, 2, 3, 4));
