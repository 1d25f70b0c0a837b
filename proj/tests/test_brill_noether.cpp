#include "walldiv/brill_noether.hpp"

#include <gtest/gtest.h>

using namespace walldiv;

namespace {
BNParams P(std::int64_t p, std::int64_t delta, std::int64_t k, int eps) { return BNParams::make(eps, p, delta, k); }
}  // namespace

TEST(BNParams, DeltaRange) {
  EXPECT_THROW(P(5, 6, 2, 0), DomainError);
  EXPECT_THROW(P(5, 4, 2, 1), DomainError);
  EXPECT_THROW(P(5, -1, 2, 0), DomainError);
  EXPECT_NO_THROW(P(5, 3, 2, 1));
}

TEST(BNParams, DerivedQuantities) {
  const auto b = P(8, 1, 4, 0);
  EXPECT_EQ(b.geometric_genus(), 7);
  EXPECT_EQ(b.alpha(), 1);
  EXPECT_EQ(b.beta(), 2);
  EXPECT_EQ(b.slope(), 10);
}

TEST(ExistsPencil, Examples) {
  EXPECT_FALSE(exists_pencil(P(6, 0, 2, 0)));
  EXPECT_EQ(P(6, 0, 2, 0).alpha(), 3);
  EXPECT_TRUE(exists_pencil(P(4, 0, 3, 0)));
  EXPECT_TRUE(exists_pencil(P(6, 6, 2, 0)));
}

TEST(ExistsPencilViaRho, Examples) {
  EXPECT_FALSE(exists_pencil_via_rho(P(6, 0, 2, 0)));
  EXPECT_TRUE(exists_pencil_via_rho(P(4, 0, 3, 0)));
  // only the l = 0 term: rho(p, 0, delta) = delta >= 0
  EXPECT_TRUE(exists_pencil_via_rho(P(6, 0, 2, 0), 0));
  // rho(6, 1, 2) = -4 already fails at l = 1; the l = 3 term is -6
  EXPECT_FALSE(exists_pencil_via_rho(P(6, 0, 2, 0), 1));
  EXPECT_EQ(bn_rho(6, 3, 6), -6);
}

TEST(BnDims, Examples) {
  EXPECT_EQ(bn_dims(P(4, 0, 3, 0)).locus_dim, 4);
  EXPECT_EQ(bn_dims(P(4, 0, 3, 0)).g1_dim, 0);
  EXPECT_EQ(bn_dims(P(2, 0, 2, 0)).locus_dim, 2);
  EXPECT_EQ(bn_dims(P(6, 6, 2, 0)).locus_dim, 0);
  EXPECT_EQ(bn_dims(P(6, 6, 2, 0)).g1_dim, 2);
  EXPECT_THROW(bn_dims(P(6, 0, 2, 0)), DomainError);
}

TEST(CurveClass, Examples) {
  EXPECT_EQ(curve_class(P(2, 0, 2, 0)), (CurveClass{1, -3}));
  EXPECT_EQ(curve_class(P(7, 0, 2, 1)), (CurveClass{1, -9}));
  EXPECT_EQ(curve_class(P(14, 2, 8, 0)), (CurveClass{1, -19}));
  EXPECT_EQ(dual_divisor(P(2, 0, 2, 0)), (DivisorClass{1, Rational(-3, 2)}));
}

TEST(CurveSquare, Examples) {
  const auto a = curve_square(P(2, 0, 2, 0));
  EXPECT_EQ(a.value, Rational(-5, 2));
  EXPECT_TRUE(a.minimal);
  EXPECT_TRUE(a.equality_case);
  EXPECT_TRUE(a.forms_agree);
  const auto b = curve_square(P(4, 0, 3, 0));
  EXPECT_EQ(b.value, -3);
  EXPECT_EQ(b.alternate, -3);
  EXPECT_EQ(b.rho, 0);
  EXPECT_EQ(b.beta, 2);
  EXPECT_TRUE(b.minimal);
  const auto c = curve_square(P(8, 1, 4, 0));
  EXPECT_EQ(c.value, Rational(-8, 3));
  EXPECT_FALSE(c.minimal);
}

TEST(CurveSquare, MatchesBBSquareOfTheClass) {
  for (int eps = 0; eps <= 1; ++eps)
    for (int k = 2; k <= 5; ++k)
      for (int p = 2; p <= 12; ++p)
        for (int d = 0; d <= p - 2 * eps; ++d) {
          const auto b = P(p, d, k, eps);
          EXPECT_EQ(curve_square(b).value, bb_square(curve_class(b), b.ctx()));
        }
}

TEST(IsWallBySquare, Examples) {
  EXPECT_TRUE(is_wall_by_square(P(2, 0, 2, 0)));
  EXPECT_FALSE(is_wall_by_square(P(6, 6, 2, 0)));
  EXPECT_EQ(curve_square(P(6, 6, 2, 0)).value, Rational(19, 2));
  EXPECT_TRUE(is_wall_by_square(P(4, 0, 3, 0)));
  EXPECT_THROW(is_wall_by_square(P(6, 0, 2, 0)), DomainError);
}
