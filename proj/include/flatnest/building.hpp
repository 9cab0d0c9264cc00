#ifndef FLATNEST_BUILDING_HPP
#define FLATNEST_BUILDING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/ground.hpp"
#include "flatnest/sorted_set.hpp"

namespace flatnest {

/// A family of nonempty vertex sets. Building sets are hypergraphs that pass
/// is_building_set against a host complex.
template <class V>
using Hypergraph = SortedSet<SortedSet<V>>;

/// Least superset closed under unions of intersecting members.
template <class V>
Hypergraph<V> saturate(const Hypergraph<V>& h) {
  std::vector<SortedSet<V>> members(h.begin(), h.end());
  SortedSet<SortedSet<V>> known(members);
  // Every pair (i, j) with i < j is examined once; new members join the tail.
  for (std::size_t j = 1; j < members.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!members[i].intersects(members[j])) continue;
      auto u = members[i].unite(members[j]);
      if (!known.contains(u)) {
        known = known.with(u);
        members.push_back(std::move(u));
      }
    }
  }
  return known;
}

/// H_γ = {β ∈ H | β ⊆ γ}.
template <class V>
Hypergraph<V> restrict(const Hypergraph<V>& h, const SortedSet<V>& gamma) {
  std::vector<SortedSet<V>> out;
  for (const auto& m : h)
    if (m.is_subset_of(gamma)) out.push_back(m);
  return Hypergraph<V>::from_sorted(std::move(out));
}

template <class V>
bool is_atomic(const Hypergraph<V>& h) {
  for (const auto& v : union_of(h))
    if (!h.contains(SortedSet<V>{v})) return false;
  return true;
}

/// The finest hypergraph partition: members are grouped by the transitive
/// closure of "shares a vertex". Parts come out in canonical order.
template <class V>
std::vector<Hypergraph<V>> finest_partition(const Hypergraph<V>& h) {
  const std::size_t n = h.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (h[i].intersects(h[j])) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<SortedSet<V>>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(h[i]);
  std::vector<Hypergraph<V>> parts;
  for (auto& [root, members] : groups) parts.push_back(Hypergraph<V>::from_sorted(std::move(members)));
  std::sort(parts.begin(), parts.end());
  return parts;
}

template <class V>
bool is_connected(const Hypergraph<V>& h) {
  return finest_partition(h).size() <= 1;
}

namespace detail {

template <class V>
using ConstructionSet = SortedSet<Hypergraph<V>>;

template <class V>
ConstructionSet<V> constructions_rec(const Hypergraph<V>& top, const SortedSet<V>& verts,
                                     std::map<SortedSet<V>, ConstructionSet<V>>& memo) {
  if (auto it = memo.find(verts); it != memo.end()) return it->second;
  ConstructionSet<V> result;
  if (verts.empty()) {
    result = ConstructionSet<V>{Hypergraph<V>{}};
  } else {
    const auto h = restrict(top, verts);
    const auto parts = finest_partition(h);
    if (parts.size() == 1) {
      std::vector<Hypergraph<V>> out;
      for (const auto& x : verts) {
        const auto sub = constructions_rec(top, verts.without(x), memo);
        for (const auto& k : sub) out.push_back(k.with(verts));
      }
      result = ConstructionSet<V>(std::move(out));
    } else {
      std::vector<Hypergraph<V>> acc{Hypergraph<V>{}};
      for (const auto& part : parts) {
        const auto sub = constructions_rec(top, union_of(part), memo);
        std::vector<Hypergraph<V>> next;
        for (const auto& a : acc)
          for (const auto& k : sub) next.push_back(a.unite(k));
        acc = std::move(next);
      }
      result = ConstructionSet<V>(std::move(acc));
    }
  }
  memo.emplace(verts, result);
  return result;
}

}  // namespace detail

/// The constructions of an atomic hypergraph, by the inductive clauses:
/// the empty hypergraph has the single construction ∅; a connected H gets
/// K ∪ {⋃H} for every construction K of H restricted to ⋃H − {x}; a
/// disconnected H gets one construction per part, united.
///
/// Results are memoised per vertex set within the call, and coinciding
/// outcomes of different x-choices are merged.
template <class V>
SortedSet<Hypergraph<V>> constructions(const Hypergraph<V>& h) {
  for (const auto& m : h)
    if (m.empty()) fail(ErrorKind::invalid_argument, "hypergraph contains the empty set");
  if (!is_atomic(h)) fail(ErrorKind::validation, "constructions require an atomic hypergraph");
  std::map<SortedSet<V>, detail::ConstructionSet<V>> memo;
  return detail::constructions_rec(h, union_of(h), memo);
}

/// Why a family fails to be a building set of a complex, if it does.
template <class V>
std::optional<std::string> building_set_violation(const Hypergraph<V>& b, const BasicComplex<V>& c) {
  for (const auto& m : b) {
    if (m.empty()) return "building set contains the empty set";
    if (!c.has_face(m)) return "member is not a face of the complex";
  }
  for (const auto& alpha : c.bases()) {
    for (const auto& a : alpha)
      if (!b.contains(SortedSet<V>{a})) return "a singleton of a basis is missing";
    const auto local = restrict(b, alpha);
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = i + 1; j < local.size(); ++j)
        if (local[i].intersects(local[j]) && !b.contains(local[i].unite(local[j])))
          return "union of two intersecting members is missing";
  }
  return std::nullopt;
}

/// Every member is a face, and on every basis α the restriction B ∩ P(α)
/// is closed under unions of intersecting members and holds α's singletons.
template <class V>
bool is_building_set(const Hypergraph<V>& b, const BasicComplex<V>& c) {
  return !building_set_violation(b, c).has_value();
}

template <class V>
void require_building_set(const Hypergraph<V>& b, const BasicComplex<V>& c) {
  if (auto why = building_set_violation(b, c)) fail(ErrorKind::validation, "not a building set: " + *why);
}

/// All singletons of the complex's vertices.
template <class V>
Hypergraph<V> bottom_building_set(const BasicComplex<V>& c) {
  std::vector<SortedSet<V>> out;
  for (const auto& v : c.vertices()) out.push_back(SortedSet<V>{v});
  return Hypergraph<V>(std::move(out));
}

/// All nonempty faces of the complex.
template <class V>
Hypergraph<V> top_building_set(const BasicComplex<V>& c) {
  std::vector<SortedSet<V>> out;
  auto grouped = all_faces(c);
  for (std::size_t k = 1; k < grouped.size(); ++k)
    out.insert(out.end(), grouped[k].begin(), grouped[k].end());
  return Hypergraph<V>(std::move(out));
}

/// max(C − B) without the empty face: faces that can be added to a building
/// set while keeping it one.
template <class V>
Hypergraph<V> maximal_missing_faces(const Hypergraph<V>& b, const BasicComplex<V>& c) {
  std::vector<SortedSet<V>> missing;
  auto grouped = all_faces(c);
  for (std::size_t k = 1; k < grouped.size(); ++k)
    for (const auto& f : grouped[k])
      if (!b.contains(f)) missing.push_back(f);
  return maximal_members(Hypergraph<V>(std::move(missing)));
}

/// min(B − B⊥): members that can be removed while keeping a building set.
template <class V>
Hypergraph<V> removable_members(const Hypergraph<V>& b) {
  std::vector<SortedSet<V>> big;
  for (const auto& m : b)
    if (m.size() >= 2) big.push_back(m);
  return minimal_members(Hypergraph<V>::from_sorted(std::move(big)));
}

/// Grows B⊥ by up to `steps` random faces from max(C − B); each step keeps
/// a building set.
template <class V, class Rng>
Hypergraph<V> random_building_set(const BasicComplex<V>& c, Rng& rng, std::size_t steps) {
  Hypergraph<V> b = bottom_building_set(c);
  for (std::size_t i = 0; i < steps; ++i) {
    const auto candidates = maximal_missing_faces(b, c);
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    b = b.with(candidates[pick(rng)]);
  }
  return b;
}

namespace detail {
constexpr std::size_t max_nested_candidate = 24;
}

/// Literal nestedness: N ⊆ B, ⋃N is a face, and the union of every
/// N-antichain (≥ 2 pairwise incomparable members) lies outside B.
/// Exponential in |N|.
template <class V>
bool is_nested(const Hypergraph<V>& n, const Hypergraph<V>& b, const BasicComplex<V>& c) {
  if (!n.is_subset_of(b)) fail(ErrorKind::invalid_argument, "candidate nested set is not inside the building set");
  if (n.empty()) return true;
  if (!c.has_face(union_of(n))) return false;
  const std::size_t k = n.size();
  if (k > detail::max_nested_candidate) fail(ErrorKind::cap_exceeded, "nested-set candidate too large");
  std::vector<std::uint32_t> comparable(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && (n[i].is_subset_of(n[j]) || n[j].is_subset_of(n[i])))
        comparable[i] |= std::uint32_t{1} << j;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    bool antichain = true;
    for (std::size_t i = 0; i < k && antichain; ++i)
      if ((mask >> i) & 1u) antichain = (comparable[i] & mask) == 0;
    if (!antichain) continue;
    SortedSet<V> u;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) u = u.unite(n[i]);
    if (b.contains(u)) return false;
  }
  return true;
}

/// Ñ(C,B) with the members of B as vertices: its bases are the
/// constructions of B ∩ P(α) over the bases α of C.
template <class V>
BasicComplex<SortedSet<V>> nested_set_complex(const BasicComplex<V>& c, const Hypergraph<V>& b) {
  require_building_set(b, c);
  std::vector<SortedSet<SortedSet<V>>> out;
  for (const auto& alpha : c.bases())
    for (const auto& k : constructions(restrict(b, alpha))) out.push_back(k);
  return BasicComplex<SortedSet<V>>(std::move(out));
}

/// The nested complex in flat vertex form: each member β of a nested set
/// becomes the vertex β⁺, the componentwise sum of its elements.
inline Complex nested_complex(const Complex& c, const Hypergraph<SumVec>& b) {
  return map_complex(nested_set_complex(c, b), [](const Face& member) { return vec_sum(member.items()); });
}

}  // namespace flatnest

#endif  // FLATNEST_BUILDING_HPP
