#ifndef FLATNEST_COMPLEX_HPP
#define FLATNEST_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatnest/error.hpp"
#include "flatnest/ground.hpp"
#include "flatnest/sorted_set.hpp"

namespace flatnest {

/// A finite abstract simplicial complex, stored by its bases (maximal faces).
///
/// The vertex type is a template parameter: the flat engine uses SumVec,
/// the literal oracle uses nested curly-brace elements, tests use ints.
/// A complex with no bases has no faces at all; the complex whose single
/// basis is the empty face is {∅}.
template <class V>
class BasicComplex {
 public:
  using vertex_type = V;
  using Face = SortedSet<V>;

  BasicComplex() = default;

  /// Keeps only the ⊆-maximal members of `faces`.
  explicit BasicComplex(std::vector<Face> faces) {
    SortedSet<Face> all(std::move(faces));
    // Larger faces first so each candidate is tested against kept ones only.
    std::vector<const Face*> by_size;
    by_size.reserve(all.size());
    for (const auto& f : all) by_size.push_back(&f);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const Face* a, const Face* b) { return a->size() > b->size(); });
    std::vector<Face> kept;
    for (const Face* f : by_size) {
      bool dominated = false;
      for (const auto& k : kept) {
        if (k.size() > f->size() && f->is_subset_of(k)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(*f);
    }
    bases_ = SortedSet<Face>(std::move(kept));
  }

  const SortedSet<Face>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }
  bool empty() const { return bases_.empty(); }

  SortedSet<V> vertices() const { return union_of(bases_); }

  bool has_face(const Face& f) const {
    if (f.empty()) return !bases_.empty();
    for (const auto& b : bases_) {
      if (f.is_subset_of(b)) return true;
    }
    return false;
  }

  friend bool operator==(const BasicComplex& a, const BasicComplex& b) { return a.bases_ == b.bases_; }
  friend bool operator!=(const BasicComplex& a, const BasicComplex& b) { return !(a == b); }

 private:
  SortedSet<Face> bases_;
};

using Face = SortedSet<SumVec>;
using Complex = BasicComplex<SumVec>;

template <class V>
BasicComplex<V> complex_from_bases(std::vector<SortedSet<V>> faces) {
  return BasicComplex<V>(std::move(faces));
}

/// SumVec flavour: every vertex must have the ground set's length.
inline Complex complex_from_bases(const GroundSet& g, std::vector<Face> faces) {
  for (const auto& f : faces)
    for (const auto& v : f)
      if (v.dim() != g.size())
        fail(ErrorKind::invalid_argument, "face vertex has length " + std::to_string(v.dim()) +
                                              ", ground set has " + std::to_string(g.size()) + " atoms");
  return Complex(std::move(faces));
}

namespace detail {
constexpr std::size_t max_enumerable_basis = 24;
}

/// All faces, grouped by cardinality (index k holds the k-element faces).
/// The empty complex has no faces; otherwise index 0 holds ∅.
template <class V>
std::vector<std::vector<SortedSet<V>>> all_faces(const BasicComplex<V>& c) {
  using F = SortedSet<V>;
  if (c.empty()) return {};
  std::size_t top = 0;
  for (const auto& b : c.bases()) top = std::max(top, b.size());
  if (top > detail::max_enumerable_basis)
    fail(ErrorKind::cap_exceeded, "basis too large to enumerate faces");
  std::vector<std::vector<F>> grouped(top + 1);
  for (const auto& b : c.bases()) {
    const std::uint64_t n = b.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<V> items;
      for (std::uint64_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) items.push_back(b[i]);
      grouped[items.size()].push_back(F::from_sorted(std::move(items)));
    }
  }
  for (auto& g : grouped) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  return grouped;
}

/// Face counts by cardinality 1, 2, ...; the empty face is not counted.
template <class V>
std::vector<std::size_t> f_vector(const BasicComplex<V>& c) {
  auto grouped = all_faces(c);
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < grouped.size(); ++k) out.push_back(grouped[k].size());
  return out;
}

template <class V>
bool has_face(const BasicComplex<V>& c, const SortedSet<V>& f) {
  return c.has_face(f);
}

/// {g : g ∩ f = ∅ and g ∪ f ∈ c}.
template <class V>
BasicComplex<V> link(const BasicComplex<V>& c, const SortedSet<V>& f) {
  if (!c.has_face(f)) fail(ErrorKind::invalid_argument, "link of a set that is not a face");
  std::vector<SortedSet<V>> out;
  for (const auto& b : c.bases())
    if (f.is_subset_of(b)) out.push_back(b.minus(f));
  return BasicComplex<V>(std::move(out));
}

/// Applies a vertex map to every basis. The map must be one-one on the
/// vertices for the result to be isomorphic to c.
template <class V, class Fn>
auto map_complex(const BasicComplex<V>& c, Fn&& fn) {
  using W = std::decay_t<decltype(fn(std::declval<const V&>()))>;
  std::vector<SortedSet<W>> out;
  out.reserve(c.basis_count());
  for (const auto& b : c.bases()) {
    std::vector<W> items;
    items.reserve(b.size());
    for (const auto& v : b) items.push_back(fn(v));
    out.emplace_back(std::move(items));
  }
  return BasicComplex<W>(std::move(out));
}

template <class V, class W>
using VertexBijection = std::vector<std::pair<V, W>>;

/// Searches for a vertex bijection φ with A a basis of c iff φ[A] a basis of d.
///
/// Backtracking over vertices ordered basis by basis; candidates are
/// restricted to vertices with the same incidence signature (multiset of
/// sizes of the bases containing them). Intended for a few dozen vertices.
template <class V, class W>
std::optional<VertexBijection<V, W>> is_isomorphic(const BasicComplex<V>& c, const BasicComplex<W>& d) {
  if (c.basis_count() != d.basis_count()) return std::nullopt;
  const auto cv = c.vertices();
  const auto dv = d.vertices();
  if (cv.size() != dv.size()) return std::nullopt;

  auto signature = [](const auto& complex, const auto& verts) {
    std::vector<std::vector<std::size_t>> sig(verts.size());
    for (const auto& b : complex.bases())
      for (const auto& v : b) sig[static_cast<std::size_t>(verts.index_of(v))].push_back(b.size());
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  };
  const auto csig = signature(c, cv);
  const auto dsig = signature(d, dv);
  {
    auto a = csig, b = dsig;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Bases as index vectors.
  std::vector<std::vector<std::size_t>> cb, db;
  for (const auto& b : c.bases()) {
    std::vector<std::size_t> ix;
    for (const auto& v : b) ix.push_back(static_cast<std::size_t>(cv.index_of(v)));
    cb.push_back(std::move(ix));
  }
  for (const auto& b : d.bases()) {
    std::vector<std::size_t> ix;
    for (const auto& v : b) ix.push_back(static_cast<std::size_t>(dv.index_of(v)));
    std::sort(ix.begin(), ix.end());
    db.push_back(std::move(ix));
  }
  std::sort(db.begin(), db.end());

  const std::size_t n = cv.size();
  std::vector<std::size_t> order;
  std::vector<char> seen(n, 0);
  for (const auto& b : cb)
    for (auto v : b)
      if (!seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  // For each step, the c-bases that become fully assigned at that step.
  std::vector<std::vector<std::size_t>> completes(n);
  for (std::size_t bi = 0; bi < cb.size(); ++bi) {
    std::size_t last = 0;
    for (auto v : cb[bi]) last = std::max(last, position[v]);
    if (!cb[bi].empty()) completes[last].push_back(bi);
  }

  std::vector<std::size_t> image(n, n);
  std::vector<char> used(n, 0);

  auto basis_ok = [&](std::size_t bi) {
    std::vector<std::size_t> img;
    for (auto v : cb[bi]) img.push_back(image[v]);
    std::sort(img.begin(), img.end());
    return std::binary_search(db.begin(), db.end(), img);
  };

  auto search = [&](auto&& self, std::size_t step) -> bool {
    if (step == order.size()) return true;
    const std::size_t v = order[step];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || dsig[w] != csig[v]) continue;
      image[v] = w;
      used[w] = 1;
      bool ok = true;
      for (auto bi : completes[step])
        if (!basis_ok(bi)) {
          ok = false;
          break;
        }
      if (ok && self(self, step + 1)) return true;
      used[w] = 0;
      image[v] = n;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  VertexBijection<V, W> out;
  for (std::size_t v = 0; v < n; ++v) out.emplace_back(cv[v], dv[image[v]]);
  return out;
}

/// "{x,x+y,z}".
inline std::string format_face(const GroundSet& g, const Face& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += format_sum(g, f[i]);
  }
  return out + "}";
}

/// Parses a face written as a list of symbolic sums.
inline Face parse_face(const GroundSet& g, const std::vector<std::string>& sums) {
  std::vector<SumVec> v;
  for (const auto& s : sums) v.push_back(parse_sum(g, s));
  return Face(std::move(v));
}

}  // namespace flatnest

#endif  // FLATNEST_COMPLEX_HPP
