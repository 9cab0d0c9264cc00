#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace flatnest;

TEST(Building, SaturatePath) {
  auto g = fx::xyz();
  auto h = fx::family(g, {{"x"}, {"y"}, {"z"}, {"x", "y"}, {"y", "z"}});
  auto s = saturate(h);
  EXPECT_EQ(s, fx::family(g, {{"x"}, {"y"}, {"z"}, {"x", "y"}, {"y", "z"}, {"x", "y", "z"}}));
  EXPECT_EQ(saturate(s), s);
  auto g4 = fx::xyzu();
  auto disjoint = fx::family(g4, {{"x"}, {"y"}, {"z"}, {"u"}, {"x", "y"}, {"z", "u"}});
  EXPECT_EQ(saturate(disjoint), disjoint);
}

TEST(Building, SaturateIsClosed) {
  std::mt19937 rng(3);
  auto g = GroundSet({"a", "b", "c", "d", "e"});
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Face> gens;
    for (int k = 0; k < 4; ++k) {
      std::vector<SumVec> f;
      for (std::size_t i = 0; i < 5; ++i)
        if (rng() % 3 == 0) f.push_back(SumVec::unit(5, i));
      if (!f.empty()) gens.emplace_back(f);
    }
    auto s = saturate(Hypergraph<SumVec>(gens));
    for (const auto& a : s)
      for (const auto& b : s)
        if (a.intersects(b)) EXPECT_TRUE(s.contains(a.unite(b)));
    for (const auto& gen : gens) EXPECT_TRUE(s.contains(gen));
  }
}

TEST(Building, BuildingSetChecks) {
  auto g = fx::xyzu();
  auto c = simplex_boundary(g);
  auto b0 = fx::xy_building_set(g);
  EXPECT_TRUE(is_building_set(b0, c));
  EXPECT_TRUE(is_building_set(bottom_building_set(c), c));
  EXPECT_FALSE(is_building_set(b0.without(fx::face(g, {"x"})), c));
  EXPECT_FALSE(is_building_set(b0.with(fx::face(g, {"x", "y", "z", "u"})), c));
  // {x,y} and {y,z} meet inside the basis {x,y,z}, so their union is required.
  EXPECT_FALSE(is_building_set(b0.with(fx::face(g, {"y", "z"})), c));
  EXPECT_TRUE(is_building_set(b0.with(fx::face(g, {"y", "z"})).with(fx::face(g, {"x", "y", "z"})), c));
}

TEST(Building, BuildingSetIsPerBasis) {
  // On the triangle boundary, two edges meet in a vertex but never lie in
  // one basis, so no union is needed.
  auto g = fx::xyz();
  auto c = simplex_boundary(g);
  EXPECT_TRUE(is_building_set(fx::family(g, {{"x"}, {"y"}, {"z"}, {"x", "y"}, {"y", "z"}}), c));
}

TEST(Building, Restrict) {
  auto g = fx::xyzu();
  auto b0 = fx::xy_building_set(g);
  EXPECT_EQ(restrict(b0, fx::face(g, {"x", "y", "z"})), fx::family(g, {{"x"}, {"y"}, {"z"}, {"x", "y"}}));
  EXPECT_TRUE(restrict(b0, Face{}).empty());
  EXPECT_EQ(restrict(b0, fx::face(g, {"z", "u"})), fx::family(g, {{"z"}, {"u"}}));
}

TEST(Building, FinestPartition) {
  auto g = fx::xyz();
  auto connected = fx::family(g, {{"x"}, {"y"}, {"z"}, {"x", "y", "z"}});
  EXPECT_EQ(finest_partition(connected).size(), 1u);
  EXPECT_TRUE(is_connected(connected));
  auto two = finest_partition(fx::family(g, {{"x"}, {"y"}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_TRUE(finest_partition(Hypergraph<SumVec>{}).empty());
  auto g4 = fx::xyzu();
  auto parts = finest_partition(fx::family(g4, {{"x"}, {"y"}, {"z"}, {"u"}, {"x", "y"}, {"z", "u"}}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(union_of(parts[0]).unite(union_of(parts[1])).size(), 4u);
  EXPECT_FALSE(union_of(parts[0]).intersects(union_of(parts[1])));
}

TEST(Building, Constructions) {
  auto g = fx::xyzu();
  auto local = restrict(fx::xy_building_set(g), fx::face(g, {"x", "y", "z"}));
  auto ks = constructions(local);
  EXPECT_EQ(ks, (SortedSet<Hypergraph<SumVec>>{fx::family(g, {{"x"}, {"x", "y"}, {"z"}}),
                                               fx::family(g, {{"y"}, {"x", "y"}, {"z"}})}));
  EXPECT_EQ(constructions(Hypergraph<SumVec>{}).size(), 1u);
  EXPECT_THROW(constructions(fx::family(g, {{"x", "y"}})), Error);
  auto gxy = fx::xyz();
  auto full = top_building_set(full_simplex(gxy));
  EXPECT_EQ(constructions(full).size(), 6u);
  auto path = fx::family(gxy, {{"x"}, {"y"}, {"z"}, {"x", "y"}, {"y", "z"}, {"x", "y", "z"}});
  EXPECT_EQ(constructions(path).size(), 5u);
}

TEST(Building, IsNested) {
  auto g = fx::xyzu();
  auto c = simplex_boundary(g);
  auto b0 = fx::xy_building_set(g);
  EXPECT_TRUE(is_nested(fx::family(g, {{"x"}, {"x", "y"}, {"z"}}), b0, c));
  EXPECT_FALSE(is_nested(fx::family(g, {{"x"}, {"y"}}), b0, c));
  EXPECT_FALSE(is_nested(fx::family(g, {{"x"}, {"z"}, {"u"}, {"y"}}), b0, c));
  EXPECT_TRUE(is_nested(Hypergraph<SumVec>{}, b0, c));
  EXPECT_THROW(is_nested(fx::family(g, {{"y", "z"}}), b0, c), Error);
}

TEST(Building, NestedComplex) {
  auto g = fx::xyzu();
  auto c = simplex_boundary(g);
  auto n = nested_complex(c, fx::xy_building_set(g));
  EXPECT_EQ(n, fx::complex(g, {{"x", "x+y", "z"},
                               {"y", "x+y", "z"},
                               {"x", "x+y", "u"},
                               {"y", "x+y", "u"},
                               {"x", "z", "u"},
                               {"y", "z", "u"}}));
  EXPECT_EQ(nested_complex(c, bottom_building_set(c)), c);
  EXPECT_THROW(nested_complex(c, fx::family(g, {{"x"}})), Error);
}

TEST(Building, RemovableAndMissing) {
  auto g = fx::xyzu();
  auto c = simplex_boundary(g);
  auto b0 = fx::xy_building_set(g);
  EXPECT_EQ(removable_members(b0), fx::family(g, {{"x", "y"}}));
  for (const auto& f : maximal_missing_faces(b0, c)) EXPECT_TRUE(is_building_set(b0.with(f), c));
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(is_building_set(random_building_set(c, rng, 6), c));
}
