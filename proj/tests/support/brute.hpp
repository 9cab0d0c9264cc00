#ifndef FLATNEST_TESTS_BRUTE_HPP
#define FLATNEST_TESTS_BRUTE_HPP

// Test-side reference computations. They share no code paths with the
// library beyond its value types: faces are bit masks over the vertex list,
// vectors are machine integers.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "flatnest/complex.hpp"

namespace brute {

using Vec = std::vector<long long>;

struct Indexed {
  std::vector<Vec> vertices;
  std::vector<std::uint32_t> bases;
};

inline Indexed index(const flatnest::Complex& c) {
  Indexed out;
  std::map<flatnest::SumVec, int> pos;
  for (const auto& b : c.bases())
    for (const auto& v : b) pos.emplace(v, 0);
  int i = 0;
  for (auto& [v, p] : pos) {
    p = i++;
    Vec w;
    for (std::size_t r = 0; r < v.dim(); ++r) w.push_back(v[r].convert_to<long long>());
    out.vertices.push_back(w);
  }
  for (const auto& b : c.bases()) {
    std::uint32_t m = 0;
    for (const auto& v : b) m |= 1u << pos[v];
    out.bases.push_back(m);
  }
  return out;
}

/// Every nonempty face as a vertex mask, found by testing all vertex subsets.
inline std::vector<std::uint32_t> faces(const Indexed& ix) {
  std::vector<std::uint32_t> out;
  const std::size_t n = ix.vertices.size();
  for (std::uint32_t m = 1; m < (1u << n); ++m)
    for (auto b : ix.bases)
      if ((m & b) == m) {
        out.push_back(m);
        break;
      }
  return out;
}

inline std::vector<std::size_t> f_vector(const flatnest::Complex& c) {
  const auto ix = index(c);
  std::vector<std::size_t> fv;
  for (auto m : faces(ix)) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(m));
    if (fv.size() < k) fv.resize(k, 0);
    ++fv[k - 1];
  }
  return fv;
}

/// Searches positive integer combinations with coefficients up to `bound`
/// over every pair of nonempty faces for two distinct ones with equal value.
/// True when none is found.
inline bool small_faithful(const flatnest::Complex& c, int bound = 3) {
  const auto ix = index(c);
  if (ix.vertices.empty()) return true;
  const std::size_t dim = ix.vertices.front().size();
  // value -> (face, coefficients) of the first combination reaching it
  std::map<Vec, std::pair<std::uint32_t, std::vector<int>>> seen;
  for (auto face : faces(ix)) {
    std::vector<int> verts;
    for (std::size_t i = 0; i < ix.vertices.size(); ++i)
      if (face >> i & 1u) verts.push_back(static_cast<int>(i));
    std::vector<int> k(verts.size(), 1);
    while (true) {
      Vec value(dim, 0);
      for (std::size_t j = 0; j < verts.size(); ++j)
        for (std::size_t r = 0; r < dim; ++r) value[r] += k[j] * ix.vertices[verts[j]][r];
      auto [it, fresh] = seen.emplace(value, std::make_pair(face, k));
      if (!fresh) return false;
      std::size_t j = 0;
      while (j < k.size() && k[j] == bound) k[j++] = 1;
      if (j == k.size()) break;
      ++k[j];
    }
  }
  return true;
}

}  // namespace brute

#endif
