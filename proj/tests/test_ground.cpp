#include <random>

#include <gtest/gtest.h>

#include "support/fixtures.hpp"

using namespace flatnest;

TEST(Ground, AtomVecIsUnit) {
  auto g = fx::xyzu();
  EXPECT_EQ(atom_vec(g, "x").coeffs(), (std::vector<Integer>{1, 0, 0, 0}));
  EXPECT_EQ(atom_vec(g, "u").coeffs(), (std::vector<Integer>{0, 0, 0, 1}));
  EXPECT_THROW(atom_vec(g, "w"), Error);
}

TEST(Ground, LabelsMustBeDistinctAndWellFormed) {
  EXPECT_THROW(GroundSet({"x", "x"}), Error);
  EXPECT_THROW(GroundSet({"x+y"}), Error);
  EXPECT_THROW(GroundSet({"2x"}), Error);
  EXPECT_THROW(GroundSet({""}), Error);
  EXPECT_NO_THROW(GroundSet({"a1", "b_2", "_z"}));
  EXPECT_EQ(GroundSet(std::vector<std::string>{}).size(), 0u);
}

TEST(Ground, SumVecRejectsZero) {
  EXPECT_THROW(SumVec(std::vector<Integer>{0, 0}), Error);
  EXPECT_THROW(SumVec(std::vector<Integer>{}), Error);
}

TEST(Ground, VecSum) {
  auto g = fx::xyzu();
  EXPECT_EQ(vec_sum(fx::face(g, {"x", "x+y"})), fx::sum(g, "2x+y"));
  EXPECT_EQ(vec_sum(fx::face(g, {"x+y+z"})), fx::sum(g, "x+y+z"));
  EXPECT_EQ(vec_sum(fx::face(g, {"x", "x+y", "x+y+z"})), fx::sum(g, "3x+2y+z"));
  EXPECT_THROW(vec_sum(std::vector<SumVec>{}), Error);
  EXPECT_THROW(vec_sum(std::vector<SumVec>{fx::sum(g, "x"), SumVec::unit(2, 0)}), Error);
}

TEST(Ground, ParseSum) {
  auto g = fx::xyzu();
  EXPECT_EQ(fx::sum(g, "2x+y").coeffs(), (std::vector<Integer>{2, 1, 0, 0}));
  EXPECT_EQ(fx::sum(g, "x").coeffs(), (std::vector<Integer>{1, 0, 0, 0}));
  EXPECT_EQ(fx::sum(g, "3x+y+5z+u").coeffs(), (std::vector<Integer>{3, 1, 5, 1}));
  EXPECT_EQ(fx::sum(g, " y + x ").coeffs(), (std::vector<Integer>{1, 1, 0, 0}));
  EXPECT_EQ(fx::sum(g, "x+x").coeffs(), (std::vector<Integer>{2, 0, 0, 0}));
  for (const char* bad : {"0x", "", "x+", "+x", "2", "w", "x++y", "-x", "x y"}) {
    try {
      parse_sum(g, bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse) << bad;
    }
  }
}

TEST(Ground, FormatSum) {
  auto g = fx::xyzu();
  EXPECT_EQ(format_sum(g, fx::sum(g, "y+6x+3z+5y")), "6x+6y+3z");
  EXPECT_EQ(format_sum(g, fx::sum(g, "u")), "u");
  Integer big = 1;
  for (int i = 0; i < 100; ++i) big *= 10;
  SumVec v(std::vector<Integer>{big, 0, 1, 0});
  EXPECT_EQ(parse_sum(g, format_sum(g, v)), v);
}

TEST(Ground, RoundTripProperty) {
  auto g = fx::xyzu();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(0, 12);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Integer> c(4);
    for (auto& x : c) x = coeff(rng);
    if (c == std::vector<Integer>(4, 0)) c[trial % 4] = 1;
    SumVec v(c);
    const auto text = format_sum(g, v);
    EXPECT_EQ(parse_sum(g, text), v);
    EXPECT_EQ(format_sum(g, parse_sum(g, text)), text);
  }
}

TEST(Ground, VecSumSplitsOverDisjointParts) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SumVec> all;
    while (all.size() < 6) {
      std::vector<Integer> c(3);
      for (auto& x : c) x = coeff(rng);
      if (c != std::vector<Integer>(3, 0)) all.emplace_back(c);
    }
    const std::size_t cut = 1 + trial % 5;
    std::vector<SumVec> a(all.begin(), all.begin() + cut), b(all.begin() + cut, all.end());
    EXPECT_EQ(vec_sum(all), vec_sum(std::vector<SumVec>{vec_sum(a), vec_sum(b)}));
  }
}

TEST(Ground, OrderIsTotalAndDeterministic) {
  auto g = fx::xyz();
  std::vector<SumVec> v{fx::sum(g, "z"), fx::sum(g, "x"), fx::sum(g, "x+y"), fx::sum(g, "y"), fx::sum(g, "2x")};
  SortedSet<SumVec> s(v);
  std::reverse(v.begin(), v.end());
  EXPECT_EQ(SortedSet<SumVec>(v), s);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) EXPECT_TRUE(s[i] < s[i + 1]);
}
