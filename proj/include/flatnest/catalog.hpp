#ifndef FLATNEST_CATALOG_HPP
#define FLATNEST_CATALOG_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatnest/building.hpp"
#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/flat.hpp"
#include "flatnest/ground.hpp"

namespace flatnest {

/// x, y, z, u, v, w for up to six atoms, a1, a2, ... beyond.
inline GroundSet default_ground(std::size_t n) {
  static const char* short_names[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(n <= 6 ? std::string(short_names[i]) : "a" + std::to_string(i + 1));
  return GroundSet(std::move(labels));
}

/// P(X) − {X}: all (|X| − 1)-subsets of the atoms.
inline Complex simplex_boundary(const GroundSet& g) {
  if (g.size() == 0) fail(ErrorKind::invalid_argument, "simplex boundary needs at least one atom");
  std::vector<Face> bases;
  for (std::size_t skip = 0; skip < g.size(); ++skip) {
    std::vector<SumVec> f;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (i != skip) f.push_back(SumVec::unit(g.size(), i));
    bases.emplace_back(std::move(f));
  }
  return Complex(std::move(bases));
}

/// P(X).
inline Complex full_simplex(const GroundSet& g) {
  if (g.size() == 0) fail(ErrorKind::invalid_argument, "simplex needs at least one atom");
  std::vector<SumVec> f;
  for (std::size_t i = 0; i < g.size(); ++i) f.push_back(SumVec::unit(g.size(), i));
  return Complex(std::vector<Face>{Face(std::move(f))});
}

namespace detail {
inline void require_atomic_vertices(const Complex& c) {
  for (const auto& v : c.vertices())
    if (!v.is_unit()) fail(ErrorKind::validation, "vertex " + format_tuple(v) + " is not an atom");
}
}  // namespace detail

inline Hypergraph<SumVec> b_bot(const Complex& c) {
  detail::require_atomic_vertices(c);
  return bottom_building_set(c);
}

inline Hypergraph<SumVec> b_top(const Complex& c) {
  detail::require_atomic_vertices(c);
  return top_building_set(c);
}

/// Saturated closure of the singletons and edges, cut down to the faces of c.
inline Hypergraph<SumVec> graph_building_set(const Complex& c, const std::vector<std::pair<SumVec, SumVec>>& edges) {
  detail::require_atomic_vertices(c);
  const auto verts = c.vertices();
  std::vector<Face> gens;
  for (const auto& v : verts) gens.push_back(Face{v});
  for (const auto& [a, b] : edges) {
    if (!verts.contains(a) || !verts.contains(b))
      fail(ErrorKind::invalid_argument, "edge endpoint is not a vertex of the complex");
    if (a == b) fail(ErrorKind::invalid_argument, "graph edges join two distinct vertices");
    gens.push_back(Face{a, b});
  }
  std::vector<Face> kept;
  for (const auto& m : saturate(Hypergraph<SumVec>(std::move(gens))))
    if (c.has_face(m)) kept.push_back(m);
  Hypergraph<SumVec> b(std::move(kept));
  if (auto why = building_set_violation(b, c))
    fail(ErrorKind::validation, "graph does not give a building set of this complex: " + *why);
  return b;
}

/// A named complex together with its ground set.
struct Preset {
  GroundSet ground;
  Complex complex;
};

namespace detail {

inline std::size_t preset_size(std::string_view name, std::string_view prefix, std::size_t minimum) {
  const auto digits = name.substr(prefix.size());
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    fail(ErrorKind::invalid_argument, "malformed preset name '" + std::string(name) + "'");
  if (n < minimum)
    fail(ErrorKind::invalid_argument, "preset '" + std::string(name) + "' needs size at least " + std::to_string(minimum));
  if (n > 16) fail(ErrorKind::cap_exceeded, "preset size capped at 16");
  return n;
}

inline Face unit_face(std::size_t dim, std::initializer_list<std::size_t> idx) {
  std::vector<SumVec> f;
  for (auto i : idx) f.push_back(SumVec::unit(dim, i));
  return Face(std::move(f));
}

}  // namespace detail

/// Facet complexes of simple polytopes: atoms are facets, bases are the
/// facet sets meeting at a vertex.
///
///   simplex-n   n+1 facets, the boundary of the n-simplex's dual
///   cube-d      facets a_i, b_i opposite in direction i
///   polygon-n   sides s1..sn
///   prism-n     sides s1..sn, bottom p, top q
inline Preset facet_complex_preset(std::string_view name) {
  if (name.starts_with("simplex-")) {
    const auto n = detail::preset_size(name, "simplex-", 1);
    auto g = default_ground(n + 1);
    auto c = simplex_boundary(g);
    return {std::move(g), std::move(c)};
  }
  if (name.starts_with("cube-")) {
    const auto d = detail::preset_size(name, "cube-", 1);
    if (d > 8) fail(ErrorKind::cap_exceeded, "cube preset capped at dimension 8");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= d; ++i) {
      labels.push_back("a" + std::to_string(i));
      labels.push_back("b" + std::to_string(i));
    }
    GroundSet g(std::move(labels));
    std::vector<Face> bases;
    for (std::size_t choice = 0; choice < (std::size_t{1} << d); ++choice) {
      std::vector<SumVec> f;
      for (std::size_t i = 0; i < d; ++i) f.push_back(SumVec::unit(2 * d, 2 * i + ((choice >> i) & 1u)));
      bases.emplace_back(std::move(f));
    }
    return {std::move(g), Complex(std::move(bases))};
  }
  if (name.starts_with("polygon-")) {
    const auto n = detail::preset_size(name, "polygon-", 3);
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
    GroundSet g(std::move(labels));
    std::vector<Face> bases;
    for (std::size_t i = 0; i < n; ++i) bases.push_back(detail::unit_face(n, {i, (i + 1) % n}));
    return {std::move(g), Complex(std::move(bases))};
  }
  if (name.starts_with("prism-")) {
    const auto n = detail::preset_size(name, "prism-", 3);
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("s" + std::to_string(i));
    labels.push_back("p");
    labels.push_back("q");
    GroundSet g(std::move(labels));
    std::vector<Face> bases;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t cap : {n, n + 1}) bases.push_back(detail::unit_face(n + 2, {i, (i + 1) % n, cap}));
    return {std::move(g), Complex(std::move(bases))};
  }
  fail(ErrorKind::invalid_argument, "unknown preset '" + std::string(name) + "'");
}

/// The two levels of PA_n on |X| = n + 1 atoms: B⊤ of the simplex boundary,
/// then the sums b_k + ... + b_l (k < l ≤ n) of initial-segment sums
/// b_j = a_1 + ... + a_j over sequences of distinct atoms.
inline std::pair<Hypergraph<SumVec>, FlatBuildingSet> pa_levels(const GroundSet& g) {
  if (g.size() < 2) fail(ErrorKind::invalid_argument, "PA levels need at least two atoms");
  const std::size_t dim = g.size();
  const std::size_t n = dim - 1;
  const auto host = simplex_boundary(g);
  const auto top = b_top(host);
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::set<SumVec> found;
  do {
    std::vector<SumVec> b;
    std::vector<Integer> acc(dim, 0);
    for (std::size_t j = 0; j < n; ++j) {
      acc[perm[j]] += 1;
      b.emplace_back(acc);
    }
    for (std::size_t k = 0; k < n; ++k) {
      SumVec s = b[k];
      for (std::size_t l = k + 1; l < n; ++l) {
        s += b[l];
        found.insert(s);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {top, FlatBuildingSet(std::vector<SumVec>(found.begin(), found.end()))};
}

/// Every building set of a small complex, in canonical order. Grown from B⊥
/// one face at a time; every building set is reachable because stripping a
/// minimal non-singleton member always leaves one.
inline std::vector<Hypergraph<SumVec>> all_building_sets(const Complex& c, std::size_t max_vertices = 5) {
  if (c.vertices().size() > max_vertices)
    fail(ErrorKind::cap_exceeded, "building-set enumeration limited to " + std::to_string(max_vertices) + " vertices");
  detail::require_atomic_vertices(c);
  std::vector<Face> faces;
  const auto grouped = all_faces(c);
  for (std::size_t k = 2; k < grouped.size(); ++k) faces.insert(faces.end(), grouped[k].begin(), grouped[k].end());
  std::set<Hypergraph<SumVec>> seen;
  std::deque<Hypergraph<SumVec>> queue;
  const auto start = bottom_building_set(c);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    const auto b = queue.front();
    queue.pop_front();
    for (const auto& f : faces) {
      if (b.contains(f)) continue;
      auto next = b.with(f);
      if (seen.count(next) || !is_building_set(next, c)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace flatnest

#endif  // FLATNEST_CATALOG_HPP
