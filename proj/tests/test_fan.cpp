#include <random>

#include <gtest/gtest.h>

#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace flatnest;

TEST(Fan, RationalFeasible) {
  RationalMatrix a{{1}};
  std::vector<Rational> b{1};
  auto x = rational_feasible(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 1);
  RationalMatrix a2{{1, 1}, {1, 1}};
  std::vector<Rational> b2{0, 1};
  EXPECT_FALSE(rational_feasible(a2, b2).has_value());
  RationalMatrix a3{{1, -1}, {1, 1}};
  std::vector<Rational> b3{Rational(1, 2), 3};
  auto y = rational_feasible(a3, b3);
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ((*y)[0], Rational(7, 4));
  EXPECT_EQ((*y)[1], Rational(5, 4));
  EXPECT_THROW(rational_feasible(a3, std::vector<Rational>{1}), Error);
}

TEST(Fan, SimplexIsFaithful) {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto g = default_ground(n);
    EXPECT_TRUE(faithfully_realizes(full_simplex(g)).faithful);
    EXPECT_TRUE(faithfully_realizes(simplex_boundary(g)).faithful);
  }
}

TEST(Fan, CollisionCounterexample) {
  auto g = fx::xy();
  auto c = fx::complex(g, {{"x", "x+y", "2x+y"}});
  auto report = faithfully_realizes(c);
  EXPECT_FALSE(report.faithful);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_TRUE(witness_valid(*report.witness));
  const auto& w = *report.witness;
  SortedSet<Face> sides{w.lhs, w.rhs};
  EXPECT_EQ(sides, (SortedSet<Face>{fx::face(g, {"x", "x+y"}), fx::face(g, {"2x+y"})}));
  for (const auto& k : w.lhs_coeffs) EXPECT_EQ(k, 1);
  for (const auto& k : w.rhs_coeffs) EXPECT_EQ(k, 1);
  EXPECT_THROW(fan_export(c), Error);
}

TEST(Fan, OverlappingConesAcrossBases) {
  // Independent bases whose cones overlap: x+y lies inside cone(x, y).
  auto g = fx::xyz();
  auto c = fx::complex(g, {{"x", "y"}, {"x+y", "z"}});
  auto report = faithfully_realizes(c);
  EXPECT_FALSE(report.faithful);
  ASSERT_TRUE(report.witness.has_value());
  EXPECT_TRUE(witness_valid(*report.witness));
  EXPECT_FALSE(brute::small_faithful(c, 4));
}

TEST(Fan, WitnessValidRejectsBadWitnesses) {
  auto g = fx::xy();
  FaithfulnessWitness w{fx::face(g, {"x"}), {1}, fx::face(g, {"x"}), {1}};
  EXPECT_FALSE(witness_valid(w));
  FaithfulnessWitness w2{fx::face(g, {"x"}), {2}, fx::face(g, {"y"}), {2}};
  EXPECT_FALSE(witness_valid(w2));
  FaithfulnessWitness w3{fx::face(g, {"x", "y"}), {1, 1}, fx::face(g, {"x+y"}), {1}};
  EXPECT_TRUE(witness_valid(w3));
}

TEST(Fan, ExportTriangle) {
  auto g = fx::xyz();
  auto fan = fan_export(simplex_boundary(g));
  EXPECT_EQ(fan.rays.size(), 3u);
  EXPECT_EQ(fan.cones.size(), 3u);
  for (const auto& cone : fan.cones) EXPECT_EQ(cone.size(), 2u);
}

TEST(Fan, ExportPentagon) {
  auto g = fx::xyz();
  auto c = simplex_boundary(g);
  auto b = graph_building_set(c, {{fx::sum(g, "x"), fx::sum(g, "y")}, {fx::sum(g, "y"), fx::sum(g, "z")}});
  auto pentagon = et(c, to_flat(b, c));
  auto fan = fan_export(pentagon);
  EXPECT_EQ(fan.rays.size(), 5u);
  EXPECT_EQ(fan.cones.size(), 5u);
  auto has = [&](std::vector<Integer> r) { return std::find(fan.rays.begin(), fan.rays.end(), r) != fan.rays.end(); };
  EXPECT_TRUE(has({1, 1, 0}));
  EXPECT_TRUE(has({0, 1, 1}));
  // Cone intersections are the cones of face intersections.
  const auto verts = pentagon.vertices();
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    for (std::size_t j = 0; j < fan.cones.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(fan.cones[i].begin(), fan.cones[i].end(), fan.cones[j].begin(), fan.cones[j].end(),
                            std::back_inserter(common));
      auto meet = pentagon.bases()[i].intersect(pentagon.bases()[j]);
      std::vector<std::size_t> expected;
      for (const auto& v : meet) expected.push_back(static_cast<std::size_t>(verts.index_of(v)));
      EXPECT_EQ(common, expected);
    }
}

TEST(Fan, AgreesWithBoundedSearch) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coeff(0, 2);
  int unfaithful = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 2 + trial % 2;
    std::vector<SumVec> pool;
    while (pool.size() < 6) {
      std::vector<Integer> v(dim);
      for (auto& x : v) x = coeff(rng);
      if (v != std::vector<Integer>(dim, 0)) pool.emplace_back(v);
    }
    SortedSet<SumVec> verts(pool);
    std::vector<Face> bases;
    for (int k = 0; k < 3; ++k) {
      std::vector<SumVec> f;
      for (const auto& v : verts)
        if (rng() % 2) f.push_back(v);
      if (f.size() > dim) f.resize(dim);
      if (!f.empty()) bases.emplace_back(f);
    }
    if (bases.empty()) continue;
    Complex c(bases);
    const auto report = faithfully_realizes(c);
    const bool bounded = brute::small_faithful(c, 4);
    if (report.faithful) {
      EXPECT_TRUE(bounded) << "trial " << trial;
      continue;
    }
    ++unfaithful;
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_TRUE(witness_valid(*report.witness)) << "trial " << trial;
    // The bounded search sees every relation whose primitive form fits its bound.
    Rational top = 0;
    for (const auto* side : {&report.witness->lhs_coeffs, &report.witness->rhs_coeffs})
      for (const auto& k : *side) top = std::max(top, k);
    if (top <= 4) EXPECT_FALSE(bounded) << "trial " << trial;
  }
  EXPECT_GT(unfaithful, 10);
}

TEST(Fan, ReportIsDeterministicAcrossThreads) {
  auto g = fx::xyzu();
  auto c = simplex_boundary(g);
  auto out = et(c, to_flat(b_top(c), c));
  EXPECT_TRUE(faithfully_realizes(out, 1).faithful);
  EXPECT_TRUE(faithfully_realizes(out, 4).faithful);
  auto f1 = fan_export(out, 1), f4 = fan_export(out, 4);
  EXPECT_EQ(f1.rays, f4.rays);
  EXPECT_EQ(f1.cones, f4.cones);
}
