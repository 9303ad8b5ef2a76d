#include <gtest/gtest.h>

#include "supertrop/error.hpp"
#include "supertrop/spectral.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {
const char* const NI = "-inf";
}

TEST(Spectral, CharPoly) {
  EXPECT_EQ(char_poly(M({{"0", "0"}, {"1", "2"}})), P("2, 2, 0"));
  EXPECT_EQ(char_poly(M({{"1", "2"}, {"3", "4"}})), P("5g, 4, 0"));
  const Matrix a = M({{"1", "0", NI}, {"3", "4", NI}, {NI, NI, "1"}});
  EXPECT_EQ(char_poly(a), P("6, 5g, 4, 0"));
  EXPECT_EQ(char_poly(nabla(a)), P("-6, -2, -1g, 0"));
  EXPECT_EQ(char_poly(M({{"3"}})), P("3, 0"));
  EXPECT_THROW(char_poly(M({{"1", "2"}})), error);
}

TEST(Spectral, Trace) {
  EXPECT_EQ(trace(M({{"1", "2"}, {"3", "4"}})), E("4"));
  EXPECT_EQ(trace(Matrix::identity(2)), E("0g"));
  EXPECT_EQ(trace(M({{"3", NI}, {NI, "3"}})), E("3g"));
}

TEST(Spectral, Eigenvalues) {
  const RootSet a = eigenvalues(M({{"0", "0"}, {"1", "2"}}));
  EXPECT_EQ(a.corner, (std::vector<CornerRoot>{{E("0"), 1}, {E("2"), 1}}));
  const RootSet b = eigenvalues(M({{"1", "2"}, {"3", "4"}}));
  EXPECT_EQ(b.corner, (std::vector<CornerRoot>{{E("4"), 1}}));
  ASSERT_EQ(b.noncorner.size(), 1u);
  EXPECT_EQ(b.noncorner[0].hi, E("1"));
  EXPECT_TRUE(b.contains(E("-inf")));
  const RootSet d = eigenvalues(M({{"-2", NI}, {NI, "5"}}));
  EXPECT_EQ(d.corner, (std::vector<CornerRoot>{{E("-2"), 1}, {E("5"), 1}}));
  // A strictly singular matrix has the eigenvalue -inf.
  EXPECT_GT(eigenvalues(M({{"1", NI}, {NI, NI}})).neg_inf_multiplicity, 0u);
}

TEST(Spectral, CheckEigenpair) {
  const std::vector<Element> v{E("3"), E("-1")};
  EXPECT_TRUE(check_eigenpair(Matrix::identity(2), v, E("0")));
  const std::vector<Element> e1{E("0"), E("-inf")};
  EXPECT_TRUE(check_eigenpair(M({{"2", NI}, {NI, "5"}}), e1, E("2")));
  const std::vector<Element> w{E("0"), E("2")};
  const Matrix a = M({{"0", "0"}, {"1", "2"}});
  EXPECT_EQ(a * Matrix(2, 1, w), Matrix(2, 1, {E("2"), E("4")}));
  EXPECT_TRUE(check_eigenpair(a, w, E("2")));
  EXPECT_FALSE(check_eigenpair(a, w, E("3")));
  const std::vector<Element> ghost{E("0g"), E("2")};
  EXPECT_THROW(check_eigenpair(a, ghost, E("2")), error);
  EXPECT_THROW(check_eigenpair(a, e1, E("2g")), error);
  const std::vector<Element> short_v{E("0")};
  EXPECT_THROW(check_eigenpair(a, short_v, E("2")), error);
}

TEST(Spectral, EvalAtMatrix) {
  const Matrix a = M({{"0", "0"}, {"1", "2"}});
  EXPECT_EQ(eval_at_matrix(P("2, 2, 0"), a), M({{"2g", "2g"}, {"3g", "4g"}}));
  EXPECT_EQ(eval_at_matrix(P("3"), a), scalar_mul(E("3"), Matrix::identity(2)));
  EXPECT_EQ(eval_at_matrix(P("-inf, 0"), a), a);
}

TEST(Spectral, Conjugate) {
  const Matrix b = M({{"1", "2"}, {"3", "1"}});
  EXPECT_EQ(conjugate(Matrix::identity(2), b), b);
  EXPECT_EQ(conjugate(M({{"0", "1g"}, {NI, "0"}}), M({{"0", "0"}, {"1", "2"}})),
            M({{"2g", "3g"}, {"1", "2g"}}));
  // Direct evaluation gives a tangible 1 in position (0, 1), in either
  // association; the characteristic polynomial is unaffected.
  const Matrix a = M({{"2", "0"}, {"1", "0"}});
  const Matrix bp = conjugate(a, b);
  EXPECT_EQ(bp, M({{"3", "1"}, {"5", "3"}}));
  EXPECT_EQ(nabla(a) * (b * a), bp);
  EXPECT_EQ(char_poly(bp), P("6g, 3g, 0"));
  EXPECT_EQ(char_poly(M({{"3", "1g"}, {"5", "3"}})), char_poly(bp));
  EXPECT_THROW(conjugate(M({{NI, NI}, {NI, NI}}), b), error);
}

TEST(Spectral, SimilarityReducesToTheRightDefiniteForm) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Matrix a = random_matrix(n, 500 * n + s, Constraint::NonSingular, 0.2);
      const Matrix b = random_matrix(n, 900 * n + s, Constraint::None, 0.2);
      const Matrix right = definite_form(a, Side::Right).definite;
      EXPECT_EQ(char_poly(conjugate(a, b)), char_poly(conjugate(right, b)));
    }
  }
}
