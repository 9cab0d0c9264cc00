#ifndef FLATNEST_ORACLE_HPP
#define FLATNEST_ORACLE_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flatnest/building.hpp"
#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/flat.hpp"
#include "flatnest/ground.hpp"
#include "flatnest/sorted_set.hpp"

// Literal curly-brace nested sets. Deliberately brute force: this is the
// reference the flat engine is checked against.

namespace flatnest {

namespace detail {
struct NestedNode;
}

/// An atom (level 0) or a nonempty set of elements of one level k, which
/// sits at level k + 1. Interned: equal elements share one node.
class NestedElem {
 public:
  static NestedElem atom(std::size_t index);
  /// Throws on an empty set or members of mixed levels.
  static NestedElem collection(const SortedSet<NestedElem>& members);

  std::size_t level() const;
  bool is_atom() const;
  std::size_t atom_index() const;
  const SortedSet<NestedElem>& members() const;

  friend bool operator==(NestedElem a, NestedElem b) { return a.node_ == b.node_; }
  friend bool operator!=(NestedElem a, NestedElem b) { return a.node_ != b.node_; }
  friend bool operator<(NestedElem a, NestedElem b);

 private:
  explicit NestedElem(const detail::NestedNode* node) : node_(node) {}
  const detail::NestedNode* node_ = nullptr;
};

namespace detail {

struct NestedNode {
  std::size_t level = 0;
  std::size_t atom = 0;
  SortedSet<NestedElem> members;
};

class InternTable {
 public:
  static InternTable& instance() {
    static InternTable table;
    return table;
  }

  const NestedNode* intern(std::size_t level, std::size_t atom, const SortedSet<NestedElem>& members,
                           std::vector<const void*> key_members) {
    std::lock_guard<std::mutex> lock(mutex_);
    Key key{level, atom, std::move(key_members)};
    auto it = nodes_.find(key);
    if (it != nodes_.end()) return it->second.get();
    auto node = std::make_unique<NestedNode>(NestedNode{level, atom, members});
    const NestedNode* raw = node.get();
    nodes_.emplace(std::move(key), std::move(node));
    return raw;
  }

 private:
  using Key = std::tuple<std::size_t, std::size_t, std::vector<const void*>>;
  std::mutex mutex_;
  std::map<Key, std::unique_ptr<NestedNode>> nodes_;
};

}  // namespace detail

inline NestedElem NestedElem::atom(std::size_t index) {
  return NestedElem(detail::InternTable::instance().intern(0, index, {}, {}));
}

inline NestedElem NestedElem::collection(const SortedSet<NestedElem>& members) {
  if (members.empty()) fail(ErrorKind::invalid_argument, "a nested collection must be nonempty");
  const std::size_t lvl = members.front().level();
  std::vector<const void*> key;
  for (const auto& m : members) {
    if (m.level() != lvl) fail(ErrorKind::invalid_argument, "members of a nested collection must share one level");
    key.push_back(m.node_);
  }
  return NestedElem(detail::InternTable::instance().intern(lvl + 1, 0, members, std::move(key)));
}

inline std::size_t NestedElem::level() const { return node_->level; }
inline bool NestedElem::is_atom() const { return node_->level == 0; }
inline std::size_t NestedElem::atom_index() const { return node_->atom; }
inline const SortedSet<NestedElem>& NestedElem::members() const { return node_->members; }

inline bool operator<(NestedElem a, NestedElem b) {
  if (a.node_ == b.node_) return false;
  if (a.level() != b.level()) return a.level() < b.level();
  if (a.is_atom()) return a.atom_index() < b.atom_index();
  return a.members() < b.members();
}

using LiteralComplex = BasicComplex<NestedElem>;
using LevelSpec = Hypergraph<NestedElem>;

struct OracleLimits {
  std::size_t max_atoms = 5;
  std::size_t max_levels = 3;
  /// Per basis and per nestedness scan.
  std::size_t max_candidates = 10000;
};

/// Curly-brace text: atoms by label, collections as {a,b,...}.
inline std::string render(const GroundSet& g, NestedElem e) {
  if (e.is_atom()) return g.label(e.atom_index());
  std::string out = "{";
  bool first = true;
  for (const auto& m : e.members()) {
    if (!first) out += ',';
    first = false;
    out += render(g, m);
  }
  return out + "}";
}

/// A face of a literal complex, as the set of its vertices.
inline std::string render(const GroundSet& g, const SortedSet<NestedElem>& face) {
  std::string out = "{";
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ',';
    out += render(g, face[i]);
  }
  return out + "}";
}

namespace detail {

class LiteralParser {
 public:
  LiteralParser(const GroundSet& g, std::string_view text) : g_(g), text_(text) {}

  NestedElem parse_all() {
    NestedElem e = parse_elem();
    skip_space();
    if (pos_ != text_.size()) error("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::parse, "literal element, position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  NestedElem parse_elem() {
    skip_space();
    if (pos_ >= text_.size()) error("unexpected end of input");
    if (text_[pos_] == '{') {
      ++pos_;
      std::vector<NestedElem> members;
      while (true) {
        members.push_back(parse_elem());
        skip_space();
        if (pos_ >= text_.size()) error("unterminated '{'");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == '}') {
          ++pos_;
          break;
        }
        error("expected ',' or '}'");
      }
      SortedSet<NestedElem> set(std::move(members));
      for (const auto& m : set)
        if (m.level() != set.front().level()) error("members of mixed levels");
      return NestedElem::collection(set);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}' && text_[pos_] != '{' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) error("expected a label or '{'");
    const auto label = std::string(text_.substr(start, pos_ - start));
    auto idx = g_.find(label);
    if (!idx) error("unknown label '" + label + "'");
    return NestedElem::atom(*idx);
  }

  const GroundSet& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline NestedElem parse_literal(const GroundSet& g, std::string_view text) {
  return detail::LiteralParser(g, text).parse_all();
}

/// The literal complex with the atoms of a complex on unit vectors.
inline LiteralComplex literal_host(const Complex& c) {
  return map_complex(c, [](const SumVec& v) {
    if (!v.is_unit()) fail(ErrorKind::validation, "literal host needs unit-vector vertices");
    for (std::size_t i = 0; i < v.dim(); ++i)
      if (v[i] == 1) return NestedElem::atom(i);
    return NestedElem::atom(0);
  });
}

namespace detail {

inline void check_atom_cap(const LiteralComplex& c, const OracleLimits& limits) {
  std::function<std::size_t(NestedElem)> top = [&](NestedElem e) -> std::size_t {
    if (e.is_atom()) return e.atom_index() + 1;
    std::size_t m = 0;
    for (const auto& x : e.members()) m = std::max(m, top(x));
    return m;
  };
  std::size_t atoms = 0;
  for (const auto& v : c.vertices()) atoms = std::max(atoms, top(v));
  if (atoms > limits.max_atoms)
    fail(ErrorKind::cap_exceeded, "oracle limited to " + std::to_string(limits.max_atoms) + " atoms");
}

/// All nested subsets of B_α found by depth-first extension. A set fails to
/// be nested as soon as some antichain through its newest member has its
/// union in B, and nestedness is inherited by subsets, so failing branches
/// are cut.
inline void nested_scan(const std::vector<SortedSet<NestedElem>>& local, const LevelSpec& b,
                        const OracleLimits& limits, std::vector<SortedSet<SortedSet<NestedElem>>>& out) {
  const std::size_t n = local.size();
  std::size_t candidates = 0;
  std::vector<std::size_t> chosen;
  auto comparable = [&](std::size_t i, std::size_t j) {
    return local[i].is_subset_of(local[j]) || local[j].is_subset_of(local[i]);
  };
  auto extends = [&](std::size_t next) {
    std::vector<std::size_t> free;
    for (auto i : chosen)
      if (!comparable(i, next)) free.push_back(i);
    if (free.size() > max_nested_candidate) fail(ErrorKind::cap_exceeded, "nested-set candidate too large");
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << free.size()); ++mask) {
      bool antichain = true;
      SortedSet<NestedElem> u = local[next];
      for (std::size_t a = 0; a < free.size() && antichain; ++a) {
        if (!((mask >> a) & 1u)) continue;
        for (std::size_t c = a + 1; c < free.size(); ++c)
          if (((mask >> c) & 1u) && comparable(free[a], free[c])) {
            antichain = false;
            break;
          }
        u = u.unite(local[free[a]]);
      }
      if (antichain && b.contains(u)) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    bool grew = false;
    for (std::size_t next = start; next < n; ++next) {
      if (++candidates > limits.max_candidates)
        fail(ErrorKind::cap_exceeded, "oracle nestedness scan exceeds " + std::to_string(limits.max_candidates) +
                                          " candidate subsets");
      if (!extends(next)) continue;
      grew = true;
      chosen.push_back(next);
      dfs(next + 1);
      chosen.pop_back();
    }
    if (!grew) {
      std::vector<SortedSet<NestedElem>> members;
      for (auto i : chosen) members.push_back(local[i]);
      out.emplace_back(std::move(members));
    }
  };
  dfs(0);
}

}  // namespace detail

/// Ñ(C, B) by definition: bases are the maximal nested subsets of B, each
/// member β becoming the vertex {β}.
inline LiteralComplex literal_nt(const LiteralComplex& c, const LevelSpec& b, const OracleLimits& limits = {}) {
  detail::check_atom_cap(c, limits);
  require_building_set(b, c);
  std::vector<SortedSet<SortedSet<NestedElem>>> nested;
  for (const auto& alpha : c.bases()) {
    const auto local = restrict(b, alpha);
    detail::nested_scan(local.items(), b, limits, nested);
  }
  std::vector<SortedSet<NestedElem>> faces;
  for (const auto& n : nested) {
    std::vector<NestedElem> verts;
    for (const auto& beta : n) verts.push_back(NestedElem::collection(beta));
    faces.emplace_back(std::move(verts));
  }
  return LiteralComplex(std::move(faces));
}

/// Left fold of literal_nt. Failures name the offending level.
inline LiteralComplex literal_nt_iter(const LiteralComplex& c, const std::vector<LevelSpec>& levels,
                                      const OracleLimits& limits = {}) {
  if (levels.size() > limits.max_levels)
    fail(ErrorKind::cap_exceeded, "oracle limited to " + std::to_string(limits.max_levels) + " levels");
  LiteralComplex current = c;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    try {
      current = literal_nt(current, levels[i], limits);
    } catch (const Error& e) {
      throw Error(e.kind(), "level " + std::to_string(i) + ": " + e.what());
    }
  }
  return current;
}

/// Atoms go to unit vectors, collections to the sum over their members.
inline SumVec flatten(NestedElem e, std::size_t dim) {
  if (e.is_atom()) {
    if (e.atom_index() >= dim) fail(ErrorKind::invalid_argument, "atom outside the ground set");
    return SumVec::unit(dim, e.atom_index());
  }
  SumVec acc = flatten(e.members().front(), dim);
  for (std::size_t i = 1; i < e.members().size(); ++i) acc += flatten(e.members()[i], dim);
  return acc;
}

/// Elementwise flatten; fails if two vertices share an image.
inline Complex flatten_complex(const LiteralComplex& c, std::size_t dim) {
  const auto verts = c.vertices();
  std::vector<SumVec> images;
  for (const auto& v : verts) images.push_back(flatten(v, dim));
  if (SortedSet<SumVec>(images).size() != images.size())
    fail(ErrorKind::mismatch, "flatten is not injective on the vertices of this complex");
  return map_complex(c, [&](NestedElem v) { return images[static_cast<std::size_t>(verts.index_of(v))]; });
}

/// D_0 = [G_0]⁺ minus the vertices of C, and D_i = [G_i]⁺ − [G_{i−1}]⁺,
/// where [G_i]⁺ is the flatten image of the members of level i.
inline std::vector<FlatBuildingSet> derive_flat_levels(const std::vector<LevelSpec>& levels, const Complex& c,
                                                       std::size_t dim) {
  SortedSet<SumVec> previous = c.vertices();
  std::vector<FlatBuildingSet> out;
  for (const auto& level : levels) {
    std::vector<SumVec> image;
    for (const auto& beta : level) image.push_back(flatten(NestedElem::collection(beta), dim));
    SortedSet<SumVec> current(std::move(image));
    out.push_back(current.minus(previous));
    previous = std::move(current);
  }
  return out;
}

/// Transports an atomic building set over the flatten image of a literal
/// complex back onto its literal vertices.
inline LevelSpec literal_level(const Hypergraph<SumVec>& b, const LiteralComplex& c, std::size_t dim) {
  const auto verts = c.vertices();
  std::map<SumVec, NestedElem> back;
  for (const auto& v : verts) {
    auto [it, fresh] = back.emplace(flatten(v, dim), v);
    if (!fresh) fail(ErrorKind::mismatch, "flatten is not injective on the vertices of this complex");
  }
  std::vector<SortedSet<NestedElem>> out;
  for (const auto& member : b) {
    std::vector<NestedElem> lifted;
    for (const auto& x : member) {
      auto it = back.find(x);
      if (it == back.end()) fail(ErrorKind::validation, "member vertex " + format_tuple(x) + " is not in the complex");
      lifted.push_back(it->second);
    }
    out.emplace_back(std::move(lifted));
  }
  return LevelSpec(std::move(out));
}

}  // namespace flatnest

#endif  // FLATNEST_ORACLE_HPP
