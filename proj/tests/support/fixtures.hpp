#ifndef FLATNEST_TESTS_FIXTURES_HPP
#define FLATNEST_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "flatnest/flatnest.hpp"

namespace fx {

using namespace flatnest;

inline GroundSet xyzu() { return GroundSet({"x", "y", "z", "u"}); }
inline GroundSet xyz() { return GroundSet({"x", "y", "z"}); }
inline GroundSet xy() { return GroundSet({"x", "y"}); }

inline SumVec sum(const GroundSet& g, const std::string& s) { return parse_sum(g, s); }

inline Face face(const GroundSet& g, std::initializer_list<const char*> sums) {
  std::vector<SumVec> out;
  for (auto s : sums) out.push_back(parse_sum(g, s));
  return Face(std::move(out));
}

inline Complex complex(const GroundSet& g, std::initializer_list<std::initializer_list<const char*>> bases) {
  std::vector<Face> out;
  for (auto b : bases) out.push_back(face(g, b));
  return Complex(std::move(out));
}

inline Hypergraph<SumVec> family(const GroundSet& g, std::initializer_list<std::initializer_list<const char*>> members) {
  std::vector<Face> out;
  for (auto m : members) out.push_back(face(g, m));
  return Hypergraph<SumVec>(std::move(out));
}

inline FlatBuildingSet flat(const GroundSet& g, std::initializer_list<const char*> sums) {
  std::vector<SumVec> out;
  for (auto s : sums) out.push_back(parse_sum(g, s));
  return FlatBuildingSet(std::move(out));
}

/// The four-atom boundary with {x,y} added to its singletons.
inline Hypergraph<SumVec> xy_building_set(const GroundSet& g) {
  return family(g, {{"x"}, {"y"}, {"z"}, {"u"}, {"x", "y"}});
}

inline LiteralComplex literal_complex(const GroundSet& g, std::initializer_list<std::initializer_list<const char*>> bases) {
  std::vector<SortedSet<NestedElem>> out;
  for (auto b : bases) {
    std::vector<NestedElem> f;
    for (auto s : b) f.push_back(parse_literal(g, s));
    out.emplace_back(std::move(f));
  }
  return LiteralComplex(std::move(out));
}

/// Members given in curly form; each string is the member set itself.
inline LevelSpec literal_family(const GroundSet& g, std::initializer_list<const char*> members) {
  std::vector<SortedSet<NestedElem>> out;
  for (auto s : members) out.push_back(parse_literal(g, s).members());
  return LevelSpec(std::move(out));
}

}  // namespace fx

#endif
