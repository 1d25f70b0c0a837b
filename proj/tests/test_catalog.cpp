#include "walldiv/catalog.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <set>

using namespace walldiv;

TEST(SeedLattice, Examples) {
  auto s = seed_lattice(2, 0);
  EXPECT_EQ(s.gram, (Gram2{-2, 1, 2}));
  EXPECT_EQ(s.p, 2);
  EXPECT_EQ(s.delta, 0);
  s = seed_lattice(4, 0);
  EXPECT_EQ(s.gram, (Gram2{-2, 3, 6}));
  EXPECT_EQ(s.p, 6);
  s = seed_lattice(2, 1);
  EXPECT_EQ(s.gram, (Gram2{0, 3, 6}));
  EXPECT_EQ(s.p, 7);
}

TEST(SeedLattice, RealisesMinimalSquare) {
  for (int eps = 0; eps <= 1; ++eps)
    for (int k = 2; k <= 10; ++k) {
      CatalogEntry s = seed_lattice(k, eps);
      verify_entry(s);
      EXPECT_TRUE(s.verified) << k << " " << eps << " " << s.note;
      EXPECT_EQ(s.q_r, Rational(-(k + 3 - 2 * eps), 2));
    }
}

TEST(Moves, DeltaMoveOfSeed) {
  const auto m = delta_move(seed_lattice(2, 0));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->gram, (Gram2{0, 0, 2}));
  EXPECT_EQ(m->p, 2);
  EXPECT_EQ(m->delta, 1);
}

TEST(Moves, GenusMoveOfSeed) {
  const auto m = genus_move(seed_lattice(4, 0));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->gram, (Gram2{-2, 2, 6}));
  EXPECT_EQ(m->p, 5);
}

TEST(Moves, Commute) {
  const auto s = seed_lattice(5, 1);
  const auto a = genus_move(*delta_move(s));
  const auto b = delta_move(*genus_move(s));
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->gram, b->gram);
  EXPECT_EQ(a->p, b->p);
  EXPECT_EQ(a->delta, b->delta);
}

TEST(Moves, LeavingTheRegionIsRejected) {
  EXPECT_FALSE(genus_move(seed_lattice(2, 0)).has_value());  // p = 1
  CatalogEntry e = seed_lattice(2, 0);
  e.delta = 2;
  EXPECT_FALSE(delta_move(e).has_value());  // delta = 3 > p
}

TEST(PredictedGram, MatchesMoves) {
  auto e = seed_lattice(4, 1);
  for (int i = 0; i < 3; ++i) e = *delta_move(e);
  e = *genus_move(e);
  EXPECT_EQ(e.gram, predicted_gram(e.p, e.delta, 4, 1));
}

TEST(GenerateCatalog, SmallestCase) {
  const auto c = generate_catalog({2, 0, 2, 2, 0});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].gram, (Gram2{-2, 1, 2}));
  EXPECT_TRUE(c[0].verified);
}

TEST(GenerateCatalog, ShiftedGenusExample) {
  // eps = 0, k = 4, a = 1: p = 5, off-diagonal k - 1 - a = 2
  const auto c = generate_catalog({4, 0, 5, 5, 0});
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(c[0].gram, (Gram2{-2, 2, 6}));
  EXPECT_TRUE(c[0].verified);
}

TEST(GenerateCatalog, EntriesAreConsistent) {
  for (int eps = 0; eps <= 1; ++eps)
    for (int k = 2; k <= 4; ++k) {
      const std::int64_t top = 2 * k - 2 + 5 * eps;
      const auto c = generate_catalog({k, eps, 2, top, top});
      std::set<std::string> ids;
      for (const auto& e : c) {
        EXPECT_TRUE(ids.insert(e.isometry_class_id).second);
        EXPECT_EQ(e.gram.c, 2 * k - 2 + 4 * eps);
        EXPECT_TRUE(admissible(e.p, e.delta, k, eps));
        EXPECT_EQ(e.gram, predicted_gram(e.p, e.delta, k, eps));
        if (e.q_r < 0) {
          EXPECT_TRUE(e.verified) << e.note;
        } else {
          EXPECT_FALSE(e.verified);
          EXPECT_EQ(e.note, "not a wall (square >= 0)");
        }
      }
    }
}

TEST(GenerateCatalog, RejectsBadRanges) {
  EXPECT_THROW(generate_catalog({1, 0, 2, 4, 2}), DomainError);
  EXPECT_THROW(generate_catalog({2, 0, 5, 4, 2}), DomainError);
  EXPECT_THROW(generate_catalog({2, 3, 2, 4, 2}), DomainError);
}

TEST(RealizeGram, Examples) {
  auto r = realize_gram({-2, 1, 2}, 2, 0);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->p, 2);
  EXPECT_EQ(r->delta, 0);
  r = realize_gram({0, 3, 6}, 2, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->p, 7);
  EXPECT_EQ(r->delta, 0);
  EXPECT_FALSE(realize_gram({-2, 0, 2}, 2, 0).has_value());
}

TEST(RealizeGram, Errors) {
  EXPECT_THROW(realize_gram({-2, 1, 4}, 2, 0), DomainError);
  EXPECT_THROW(realize_gram({-1, 1, 2}, 2, 0), DomainError);
}

TEST(ClassificationComplete, PrimePowers) {
  EXPECT_TRUE(classification_is_complete(2, 0));
  EXPECT_TRUE(classification_is_complete(3, 0));
  EXPECT_TRUE(classification_is_complete(5, 0));
  EXPECT_FALSE(classification_is_complete(7, 0));
  EXPECT_FALSE(classification_is_complete(11, 0));
  EXPECT_FALSE(classification_is_complete(5, 1));
  EXPECT_TRUE(classification_is_complete(3, 1));
  EXPECT_TRUE(classification_is_complete(4, 1));
  EXPECT_FALSE(classification_is_complete(9, 1));
}

TEST(CatalogJson, SeedLine) {
  auto s = seed_lattice(2, 0);
  verify_entry(s);
  EXPECT_EQ(catalog_json_line(s),
            R"({"epsilon":0,"k":2,"p":2,"delta":0,"gram":[-2,1,1,2],"q_R":"-5/2","is_wall":true,)"
            R"("witness":[2,-1,1],"isometry_class_id":"indef:[[-2,1],[1,2]]"})");
}

TEST(CatalogJson, FieldsExactly) {
  for (const auto& e : generate_catalog({3, 1, 2, 9, 4})) {
    const auto j = nlohmann::json::parse(catalog_json_line(e));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    EXPECT_EQ(keys, (std::vector<std::string>{"delta", "epsilon", "gram", "is_wall", "isometry_class_id", "k", "p",
                                              "q_R", "witness"}));
    EXPECT_EQ(parse_rational(j["q_R"].get<std::string>()), e.q_r);
    EXPECT_EQ(j["witness"].is_null(), !e.witness.has_value());
  }
}

TEST(LatticeClassId, Degenerate) {
  EXPECT_EQ(lattice_class_id({0, 0, 6}), "degenerate:6");
  EXPECT_EQ(lattice_class_id({2, 2, 2}), "degenerate:2");
  EXPECT_EQ(lattice_class_id({-2, 1, 2}), isometry_class_id({-2, 1, 2}));
}
