#ifndef FLATNEST_BLOWUP_HPP
#define FLATNEST_BLOWUP_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "flatnest/building.hpp"
#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/flat.hpp"

namespace flatnest {

/// Combinatorial blowup at a nonempty face f, with new vertex f⁺:
/// {γ ∈ C | f ⊄ γ} ∪ {γ ∪ {f⁺} | f ⊄ γ, f ∪ γ ∈ C}. A singleton f leaves
/// C unchanged.
inline Complex blowup(const Complex& c, const Face& f) {
  if (f.empty()) fail(ErrorKind::invalid_argument, "blowup at the empty face is not defined");
  if (!c.has_face(f)) fail(ErrorKind::validation, "blowup at " + format_tuple(f) + ", which is not a face");
  if (f.size() == 1) return c;
  const SumVec apex = vec_sum(f.items());
  if (c.vertices().contains(apex))
    fail(ErrorKind::validation, "blowup vertex " + format_tuple(apex) + " already present; host is not faithfully realized");
  std::vector<Face> out;
  for (const auto& basis : c.bases()) {
    if (!f.is_subset_of(basis)) {
      out.push_back(basis);
      continue;
    }
    // Maximal faces of the star of f inside this basis.
    for (const auto& a : f) out.push_back(basis.without(a).with(apex));
  }
  return Complex(std::move(out));
}

/// Non-singleton members of B, by cardinality and then canonical order.
/// Removing them front to back keeps a building set at every step, so
/// blowups are applied back to front.
inline std::vector<Face> blowup_order(const Hypergraph<SumVec>& b, const Complex& c) {
  require_building_set(b, c);
  std::vector<Face> order;
  for (const auto& m : b)
    if (m.size() >= 2) order.push_back(m);
  std::stable_sort(order.begin(), order.end(), [](const Face& x, const Face& y) { return x.size() < y.size(); });
  return order;
}

/// Folds blowups in the given application order. At each step the blown-up
/// face is {γ⁺ | γ maximal among the members applied so far inside β}.
/// Every intermediate family must be a building set.
inline Complex sb_via_blowups_in_order(const Complex& c, const Hypergraph<SumVec>& b,
                                       std::span<const Face> application_order) {
  require_building_set(b, c);
  {
    std::vector<Face> expected;
    for (const auto& m : b)
      if (m.size() >= 2) expected.push_back(m);
    if (SortedSet<Face>(std::vector<Face>(application_order.begin(), application_order.end())) !=
            SortedSet<Face>(expected) ||
        application_order.size() != expected.size())
      fail(ErrorKind::invalid_argument, "application order is not a permutation of the non-singleton members");
  }
  Hypergraph<SumVec> applied = bottom_building_set(c);
  Complex current = c;
  for (const auto& beta : application_order) {
    auto next = applied.with(beta);
    if (auto why = building_set_violation(next, c))
      fail(ErrorKind::validation, "intermediate family is not a building set: " + *why);
    std::vector<SumVec> face;
    for (const auto& g : maximal_members(restrict(applied, beta))) face.push_back(vec_sum(g.items()));
    current = blowup(current, Face(std::move(face)));
    applied = std::move(next);
  }
  return current;
}

/// S̄b(C, B) through the canonical sequence of blowups.
inline Complex sb_via_blowups(const Complex& c, const Hypergraph<SumVec>& b) {
  auto order = blowup_order(b, c);
  std::reverse(order.begin(), order.end());
  return sb_via_blowups_in_order(c, b, order);
}

/// A random valid application order: repeatedly strip a random minimal
/// non-singleton member, then reverse.
template <class Rng>
std::vector<Face> random_application_order(const Hypergraph<SumVec>& b, Rng& rng) {
  std::vector<Face> removal;
  Hypergraph<SumVec> current = b;
  while (true) {
    auto candidates = removable_members(current);
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const Face chosen = candidates[pick(rng)];
    removal.push_back(chosen);
    current = current.without(chosen);
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

}  // namespace flatnest

#endif  // FLATNEST_BLOWUP_HPP
