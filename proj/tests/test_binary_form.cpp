#include "oracles.hpp"
#include "walldiv/binary_form.hpp"

#include <gtest/gtest.h>

using namespace walldiv;

TEST(Rank2Isometric, BasisSwap) {
  EXPECT_TRUE(rank2_isometric(Gram2{2, 1, -2}, Gram2{-2, 1, 2}));
}

TEST(Rank2Isometric, DifferentDiscriminants) {
  EXPECT_FALSE(rank2_isometric(Gram2{-2, 3, 6}, Gram2{-2, 2, 6}));
}

TEST(Rank2Isometric, TwoPresentationsOfTheSameT) {
  const Gram2 g1{2, 3, 2}, g2{-2, 1, 2};
  EXPECT_TRUE(rank2_isometric(g1, g2));
  EXPECT_TRUE(oracle::brute_isometry(g1, g2, 10).has_value());
}

TEST(Rank2Isometric, MatrixOverload) {
  EXPECT_TRUE(rank2_isometric(Matrix{{2, 1}, {1, -2}}, Matrix{{-2, 1}, {1, 2}}));
}

TEST(Rank2Isometric, DegenerateIsDomainError) {
  EXPECT_THROW(rank2_isometric(Gram2{0, 0, 2}, Gram2{0, 0, 2}), DomainError);
  EXPECT_THROW(canonical_form(Gram2{1, 1, 1}), DomainError);
}

TEST(CanonicalForm, DefiniteSignsAreDistinguished) {
  EXPECT_FALSE(rank2_isometric(Gram2{2, 1, 2}, Gram2{-2, -1, -2}));
  EXPECT_EQ(canonical_form(Gram2{-2, 1, -2}).kind, FormKind::negative_definite);
}

TEST(CanonicalForm, ZeroDivisorFormsHaveNormalForm) {
  const CanonicalForm cf = canonical_form(Gram2{0, 2, 6});
  EXPECT_EQ(cf.kind, FormKind::zero_divisor);
  EXPECT_EQ(cf.representative, (Gram2{0, 2, 2}));
  EXPECT_EQ(apply(Gram2{0, 2, 6}, cf.to_representative), cf.representative);
}

TEST(CanonicalForm, ClassIdIsStable) {
  EXPECT_EQ(isometry_class_id(Gram2{2, 1, -2}), isometry_class_id(Gram2{-2, 1, 2}));
  EXPECT_EQ(isometry_class_id(Gram2{-2, 1, 2}).rfind("indef:", 0), 0u);
}

TEST(FindIsometry, ReturnsAWorkingTransform) {
  const Gram2 g1{-2, 3, 6}, g2 = apply(g1, Transform2{2, 1, 1, 1});
  const auto p = find_isometry(g1, g2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(apply(g1, *p), g2);
  EXPECT_TRUE(p->determinant() == 1 || p->determinant() == -1);
}

TEST(Transform2, InverseRejectsNonUnimodular) {
  EXPECT_THROW(inverse(Transform2{2, 0, 0, 1}), ContractViolation);
}
