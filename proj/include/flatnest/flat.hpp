#ifndef FLATNEST_FLAT_HPP
#define FLATNEST_FLAT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatnest/building.hpp"
#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/exact.hpp"
#include "flatnest/fan.hpp"
#include "flatnest/ground.hpp"
#include "flatnest/parallel.hpp"

namespace flatnest {

/// A flat building set: the sums β⁺ of the non-singleton members of an
/// ordinary building set, written directly as vectors.
using FlatBuildingSet = SortedSet<SumVec>;

/// "(2,1,0,0)"; used in messages where no ground set is at hand.
inline std::string format_tuple(const SumVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out + ")";
}

inline std::string format_tuple(const Face& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += format_tuple(f[i]);
  }
  return out + "}";
}

namespace detail {

constexpr std::size_t max_flat_basis = 62;

/// Subset of α (as a bit mask over α's canonical order) summing to d.
/// α must be linearly independent; nothing when no subset sums to d.
inline std::optional<std::uint64_t> preimage_mask(const SumVec& d, const std::vector<SumVec>& alpha) {
  if (alpha.size() > max_flat_basis) fail(ErrorKind::cap_exceeded, "face too large for flat constructions");
  if (alpha.empty()) return std::nullopt;
  // A subset sum of nonnegative vectors never exceeds the full sum.
  SumVec total = vec_sum(std::span<const SumVec>(alpha));
  for (std::size_t i = 0; i < d.dim(); ++i)
    if (d[i] > total[i]) return std::nullopt;
  const auto m = columns_matrix(alpha);
  std::vector<Rational> rhs;
  for (const auto& c : d.coeffs()) rhs.emplace_back(c);
  auto x = solve_unique(m, rhs);
  if (!x) return std::nullopt;
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < x->size(); ++i) {
    if ((*x)[i] == 1) {
      mask |= std::uint64_t{1} << i;
    } else if ((*x)[i] != 0) {
      return std::nullopt;
    }
  }
  if (mask == 0) return std::nullopt;
  return mask;
}

inline void require_independent(const Face& alpha) {
  if (!linearly_independent(alpha.items()))
    fail(ErrorKind::validation, "face " + format_tuple(alpha) + " is linearly dependent");
}

/// D_α for one face: the members of D whose preimage lies in α.
struct LocalFlat {
  std::vector<SumVec> alpha;
  std::vector<std::pair<std::uint64_t, SumVec>> members;
};

inline LocalFlat localize(const FlatBuildingSet& d, const Face& alpha) {
  LocalFlat local;
  local.alpha = alpha.items();
  for (const auto& member : d)
    if (auto mask = preimage_mask(member, local.alpha)) local.members.emplace_back(*mask, member);
  return local;
}

inline std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

inline Face mask_face(const std::vector<SumVec>& alpha, std::uint64_t mask) {
  std::vector<SumVec> out;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if ((mask >> i) & 1u) out.push_back(alpha[i]);
  return Face::from_sorted(std::move(out));
}

using FaceFamily = SortedSet<Face>;

inline FaceFamily flat_constructions_rec(const LocalFlat& local, std::uint64_t mask,
                                         std::map<std::uint64_t, FaceFamily>& memo) {
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  FaceFamily result;
  std::vector<std::uint64_t> inside;
  std::optional<SumVec> top;
  for (const auto& [m, d] : local.members) {
    if ((m & ~mask) != 0) continue;
    inside.push_back(m);
    if (m == mask) top = d;
  }
  if (inside.empty()) {
    result = FaceFamily{mask_face(local.alpha, mask)};
  } else if (top) {
    std::vector<Face> out;
    for (std::size_t x = 0; x < local.alpha.size(); ++x) {
      if (!((mask >> x) & 1u)) continue;
      for (const auto& g : flat_constructions_rec(local, mask & ~(std::uint64_t{1} << x), memo))
        out.push_back(g.with(*top));
    }
    result = FaceFamily(std::move(out));
  } else {
    // Maximal subsets whose sum lies in D, together with the singletons.
    std::vector<std::uint64_t> candidates = inside;
    for (std::size_t x = 0; x < local.alpha.size(); ++x)
      if ((mask >> x) & 1u) candidates.push_back(std::uint64_t{1} << x);
    std::vector<std::uint64_t> maximal;
    for (auto c : candidates) {
      bool dominated = false;
      for (auto o : candidates)
        if (o != c && (c & ~o) == 0) {
          dominated = true;
          break;
        }
      if (!dominated && std::find(maximal.begin(), maximal.end(), c) == maximal.end()) maximal.push_back(c);
    }
    std::vector<Face> acc{Face{}};
    for (auto part : maximal) {
      const auto sub = flat_constructions_rec(local, part, memo);
      std::vector<Face> next;
      for (const auto& a : acc)
        for (const auto& s : sub) next.push_back(a.unite(s));
      acc = std::move(next);
    }
    result = FaceFamily(std::move(acc));
  }
  memo.emplace(mask, result);
  return result;
}

}  // namespace detail

/// The unique nonempty S ⊆ α with S⁺ = d, when α is linearly independent.
inline std::optional<Face> preimage(const SumVec& d, const Face& alpha) {
  detail::require_independent(alpha);
  auto mask = detail::preimage_mask(d, alpha.items());
  if (!mask) return std::nullopt;
  return detail::mask_face(alpha.items(), *mask);
}

/// D_α = members of D that are sums of subsets of α.
inline FlatBuildingSet restrict_flat(const FlatBuildingSet& d, const Face& alpha) {
  detail::require_independent(alpha);
  std::vector<SumVec> out;
  for (const auto& [mask, member] : detail::localize(d, alpha).members) out.push_back(member);
  return FlatBuildingSet(std::move(out));
}

/// [B]⁺ minus the vertices of the host.
inline FlatBuildingSet to_flat(const Hypergraph<SumVec>& b, const Complex& host) {
  const auto verts = host.vertices();
  std::vector<SumVec> out;
  for (const auto& m : b) {
    auto s = vec_sum(m.items());
    if (!verts.contains(s)) out.push_back(std::move(s));
  }
  return FlatBuildingSet(std::move(out));
}

/// The atomic building set behind a flat one: all singletons of the host's
/// vertices plus every face whose sum lies in D.
inline Hypergraph<SumVec> from_flat(const FlatBuildingSet& d, const Complex& host) {
  std::vector<Face> out;
  for (const auto& v : host.vertices()) out.push_back(Face{v});
  for (const auto& basis : host.bases()) {
    if (basis.empty()) continue;
    for (const auto& [mask, member] : detail::localize(d, basis).members)
      out.push_back(detail::mask_face(basis.items(), mask));
  }
  return Hypergraph<SumVec>(std::move(out));
}

/// What went wrong when a set of vectors is not a flat building set.
struct FlatViolation {
  enum class Kind {
    dependent_basis,  // a basis of the host is linearly dependent
    not_a_face_sum,   // member is not the sum of any subset of any basis
    vertex_member,    // member is a vertex of the host (D ∩ α ≠ ∅)
    union_missing,    // γ⁺, δ⁺ ∈ D, γ ∩ δ ≠ ∅, but (γ ∪ δ)⁺ ∉ D
  };
  Kind kind;
  Face basis;
  std::optional<SumVec> member;
  std::optional<Face> gamma;
  std::optional<Face> delta;

  std::string describe(const GroundSet& g) const {
    switch (kind) {
      case Kind::dependent_basis:
        return "basis " + format_face(g, basis) + " is linearly dependent";
      case Kind::not_a_face_sum:
        return "member " + format_sum(g, *member) + " is not the sum of a face of the host";
      case Kind::vertex_member:
        return "member " + format_sum(g, *member) + " is already a vertex of the host";
      case Kind::union_missing:
        return "on basis " + format_face(g, basis) + ": " + format_face(g, *gamma) + " and " +
               format_face(g, *delta) + " intersect but the sum of their union is missing";
    }
    return {};
  }

  std::string describe() const {
    switch (kind) {
      case Kind::dependent_basis:
        return "basis " + format_tuple(basis) + " is linearly dependent";
      case Kind::not_a_face_sum:
        return "member " + format_tuple(*member) + " is not the sum of a face of the host";
      case Kind::vertex_member:
        return "member " + format_tuple(*member) + " is already a vertex of the host";
      case Kind::union_missing:
        return "on basis " + format_tuple(basis) + ": " + format_tuple(*gamma) + " and " + format_tuple(*delta) +
               " intersect but the sum of their union is missing";
    }
    return {};
  }
};

namespace detail {

inline std::optional<FlatViolation> union_violation(const LocalFlat& local, const FlatBuildingSet& d,
                                                    const Face& basis) {
  for (std::size_t i = 0; i < local.members.size(); ++i)
    for (std::size_t j = i + 1; j < local.members.size(); ++j) {
      const auto a = local.members[i].first, b = local.members[j].first;
      if ((a & b) == 0) continue;
      const SumVec u = vec_sum(mask_face(local.alpha, a | b).items());
      if (!d.contains(u))
        return FlatViolation{FlatViolation::Kind::union_missing, basis, std::nullopt,
                             mask_face(local.alpha, a), mask_face(local.alpha, b)};
    }
  return std::nullopt;
}

}  // namespace detail

/// Checks (D1) and (D2) on every basis of the host, and that each member is
/// the sum of some face. Bases must be linearly independent.
inline std::optional<FlatViolation> flat_building_set_violation(const FlatBuildingSet& d, const Complex& c) {
  for (const auto& basis : c.bases())
    if (!basis.empty() && !linearly_independent(basis.items()))
      return FlatViolation{FlatViolation::Kind::dependent_basis, basis, std::nullopt, std::nullopt, std::nullopt};
  const auto verts = c.vertices();
  for (const auto& member : d)
    if (verts.contains(member))
      return FlatViolation{FlatViolation::Kind::vertex_member, Face{}, member, std::nullopt, std::nullopt};
  std::vector<char> covered(d.size(), 0);
  for (const auto& basis : c.bases()) {
    const auto local = detail::localize(d, basis);
    for (const auto& [mask, member] : local.members) covered[static_cast<std::size_t>(d.index_of(member))] = 1;
    if (auto v = detail::union_violation(local, d, basis)) return v;
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!covered[i])
      return FlatViolation{FlatViolation::Kind::not_a_face_sum, Face{}, d[i], std::nullopt, std::nullopt};
  return std::nullopt;
}

inline bool is_flat_building_set(const FlatBuildingSet& d, const Complex& c) {
  return !flat_building_set_violation(d, c).has_value();
}

/// The flat constructions C(α, D) of a flat building set D of P(α):
/// D = ∅ gives {α}; α⁺ ∈ D gives {α⁺} ∪ γ for γ a flat construction of
/// α − {x}; otherwise one flat construction per maximal β ⊆ α with
/// β⁺ ∈ D or β a singleton, united.
inline SortedSet<Face> flat_constructions(const Face& alpha, const FlatBuildingSet& d) {
  detail::require_independent(alpha);
  const auto local = detail::localize(d, alpha);
  if (local.members.size() != d.size())
    fail(ErrorKind::validation, "flat building set has a member that is not a subset sum of " + format_tuple(alpha));
  for (const auto& member : d)
    if (alpha.contains(member))
      fail(ErrorKind::validation, "flat building set contains the vertex " + format_tuple(member));
  if (auto v = detail::union_violation(local, d, alpha)) fail(ErrorKind::validation, v->describe());
  std::map<std::uint64_t, detail::FaceFamily> memo;
  return detail::flat_constructions_rec(local, detail::full_mask(alpha.size()), memo);
}

struct EtOptions {
  /// Run the full pairwise-cone faithfulness check on the input (costly).
  bool check_faithful = false;
  unsigned threads = 1;
};

/// Et(C, D): the complex based on the flat constructions of D_α over the
/// bases α of C.
inline Complex et(const Complex& c, const FlatBuildingSet& d, const EtOptions& options = {}) {
  if (options.check_faithful) {
    auto report = faithfully_realizes(c, options.threads);
    if (!report.faithful) {
      const auto& w = *report.witness;
      fail(ErrorKind::validation, "host is not faithfully realized: positive combinations over " +
                                      format_tuple(w.lhs) + " and " + format_tuple(w.rhs) + " coincide");
    }
  }
  if (auto v = flat_building_set_violation(d, c)) fail(ErrorKind::validation, "not a flat building set: " + v->describe());
  const auto& bases = c.bases().items();
  std::vector<std::vector<Face>> per_basis(bases.size());
  detail::parallel_for(bases.size(), options.threads, [&](std::size_t i) {
    const auto local = detail::localize(d, bases[i]);
    std::map<std::uint64_t, detail::FaceFamily> memo;
    const auto fam = detail::flat_constructions_rec(local, detail::full_mask(bases[i].size()), memo);
    per_basis[i] = fam.items();
  });
  std::vector<Face> all;
  for (auto& v : per_basis) all.insert(all.end(), v.begin(), v.end());
  return Complex(std::move(all));
}

/// Left fold of et over the levels. Failures name the offending level.
inline Complex et_iter(const Complex& c, const std::vector<FlatBuildingSet>& levels, const EtOptions& options = {}) {
  Complex current = c;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    try {
      current = et(current, levels[i], options);
    } catch (const Error& e) {
      throw Error(e.kind(), "level " + std::to_string(i) + ": " + e.what());
    }
  }
  return current;
}

}  // namespace flatnest

#endif  // FLATNEST_FLAT_HPP
