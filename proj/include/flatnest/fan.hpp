#ifndef FLATNEST_FAN_HPP
#define FLATNEST_FAN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flatnest/complex.hpp"
#include "flatnest/error.hpp"
#include "flatnest/exact.hpp"
#include "flatnest/ground.hpp"
#include "flatnest/parallel.hpp"

namespace flatnest {

/// Finds x ≥ 0 with A·x = b, exactly, or reports infeasibility.
///
/// Phase one of the simplex method on [A | I] with artificial variables,
/// Bland's smallest-index rule for entering and leaving variables.
inline std::optional<std::vector<Rational>> rational_feasible(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.size();
  if (b.size() != m) fail(ErrorKind::invalid_argument, "feasibility system: row count mismatch");
  const std::size_t n = m ? a.front().size() : 0;
  for (const auto& row : a)
    if (row.size() != n) fail(ErrorKind::invalid_argument, "feasibility system: ragged matrix");
  if (m == 0) return std::vector<Rational>(n, 0);

  const std::size_t width = n + m;  // originals, then artificials; rhs kept apart
  RationalMatrix t(m, std::vector<Rational>(width, 0));
  std::vector<Rational> rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    rhs[i] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(width, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for a bounded-below objective
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  std::vector<Rational> x(width, 0);
  for (std::size_t i = 0; i < m; ++i) x[basis[i]] = rhs[i];
  for (std::size_t j = n; j < width; ++j)
    if (x[j] != 0) return std::nullopt;
  x.resize(n);
  return x;
}

/// Two distinct positive combinations over faces of a complex with equal
/// value: Σ lhs_coeffs[i]·lhs[i] = Σ rhs_coeffs[j]·rhs[j].
struct FaithfulnessWitness {
  Face lhs;
  std::vector<Rational> lhs_coeffs;
  Face rhs;
  std::vector<Rational> rhs_coeffs;
};

struct FaithfulnessReport {
  bool faithful = true;
  std::optional<FaithfulnessWitness> witness;
};

/// Re-checks a witness by direct evaluation: coefficients strictly positive,
/// both sides equal, and the two combinations are not the same one.
inline bool witness_valid(const FaithfulnessWitness& w) {
  if (w.lhs.size() != w.lhs_coeffs.size() || w.rhs.size() != w.rhs_coeffs.size()) return false;
  if (w.lhs.empty() && w.rhs.empty()) return false;
  std::size_t dim = !w.lhs.empty() ? w.lhs[0].dim() : w.rhs[0].dim();
  std::vector<Rational> diff(dim, 0);
  for (std::size_t i = 0; i < w.lhs.size(); ++i) {
    if (w.lhs_coeffs[i] <= 0) return false;
    for (std::size_t r = 0; r < dim; ++r) diff[r] += w.lhs_coeffs[i] * Rational(w.lhs[i][r]);
  }
  for (std::size_t i = 0; i < w.rhs.size(); ++i) {
    if (w.rhs_coeffs[i] <= 0) return false;
    for (std::size_t r = 0; r < dim; ++r) diff[r] -= w.rhs_coeffs[i] * Rational(w.rhs[i][r]);
  }
  for (const auto& d : diff)
    if (d != 0) return false;
  return !(w.lhs == w.rhs && w.lhs_coeffs == w.rhs_coeffs);
}

/// "x + (x+y) = 2x+y", with integer multipliers where they differ from 1.
inline std::string describe_witness(const GroundSet& g, const FaithfulnessWitness& w) {
  auto side = [&](const Face& f, const std::vector<Rational>& k) {
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += " + ";
      std::string term = format_sum(g, f[i]);
      if (term.find('+') != std::string::npos && (k[i] != 1 || f.size() > 1)) term = "(" + term + ")";
      out += (k[i] == 1 ? std::string() : k[i].str()) + term;
    }
    return out;
  };
  return side(w.lhs, w.lhs_coeffs) + " = " + side(w.rhs, w.rhs_coeffs);
}

namespace detail {

/// Scales a rational vector to coprime integers, keeping signs.
inline std::vector<Rational> primitive(std::vector<Rational> v) {
  Integer lcm = 1;
  for (const auto& x : v)
    if (x != 0) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  Integer g = 0;
  for (auto& x : v) {
    x *= lcm;
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(x));
  }
  if (g > 1)
    for (auto& x : v) x /= Rational(g);
  return v;
}

inline FaithfulnessWitness split_relation(const std::vector<SumVec>& lhs_pool, const std::vector<Rational>& lhs_x,
                                          const std::vector<SumVec>& rhs_pool, const std::vector<Rational>& rhs_x) {
  std::vector<Rational> all(lhs_x);
  all.insert(all.end(), rhs_x.begin(), rhs_x.end());
  all = primitive(std::move(all));
  FaithfulnessWitness w;
  std::vector<SumVec> l, r;
  for (std::size_t i = 0; i < lhs_pool.size(); ++i)
    if (all[i] != 0) l.push_back(lhs_pool[i]);
  for (std::size_t i = 0; i < rhs_pool.size(); ++i)
    if (all[lhs_pool.size() + i] != 0) r.push_back(rhs_pool[i]);
  w.lhs = Face(l);
  w.rhs = Face(r);
  for (const auto& v : w.lhs)
    for (std::size_t i = 0; i < lhs_pool.size(); ++i)
      if (lhs_pool[i] == v && all[i] != 0) w.lhs_coeffs.push_back(all[i]);
  for (const auto& v : w.rhs)
    for (std::size_t i = 0; i < rhs_pool.size(); ++i)
      if (rhs_pool[i] == v && all[lhs_pool.size() + i] != 0) w.rhs_coeffs.push_back(all[lhs_pool.size() + i]);
  return w;
}

/// A relation among one basis' vectors, split into its positive and
/// negative parts.
inline std::optional<FaithfulnessWitness> dependence_witness(const Face& basis) {
  auto kernel = kernel_vector(columns_matrix(basis.items()), basis.size());
  if (!kernel) return std::nullopt;
  const std::vector<SumVec>& v = basis.items();
  std::vector<Rational> pos(v.size(), 0), neg(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((*kernel)[i] > 0) pos[i] = (*kernel)[i];
    if ((*kernel)[i] < 0) neg[i] = -(*kernel)[i];
  }
  return split_relation(v, pos, v, neg);
}

/// Nonnegative k, l with Σ k_a·a = Σ l_b·b and unit mass outside A ∩ B.
inline std::optional<FaithfulnessWitness> collision_witness(const Face& a, const Face& b) {
  const std::size_t dim = a[0].dim();
  const std::size_t na = a.size(), nb = b.size();
  RationalMatrix m(dim + 1, std::vector<Rational>(na + nb, 0));
  std::vector<Rational> rhs(dim + 1, 0);
  for (std::size_t j = 0; j < na; ++j)
    for (std::size_t r = 0; r < dim; ++r) m[r][j] = Rational(a[j][r]);
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t r = 0; r < dim; ++r) m[r][na + j] = -Rational(b[j][r]);
  for (std::size_t j = 0; j < na; ++j)
    if (!b.contains(a[j])) m[dim][j] = 1;
  for (std::size_t j = 0; j < nb; ++j)
    if (!a.contains(b[j])) m[dim][na + j] = 1;
  rhs[dim] = 1;
  auto x = rational_feasible(m, rhs);
  if (!x) return std::nullopt;
  std::vector<Rational> kx(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(na));
  std::vector<Rational> lx(x->begin() + static_cast<std::ptrdiff_t>(na), x->end());
  return split_relation(a.items(), kx, b.items(), lx);
}

}  // namespace detail

/// Decides whether the coefficient vectors of the vertices faithfully
/// realize the complex, i.e. span a simplicial fan with the complex as its
/// face lattice.
///
/// Checked as: every basis is linearly independent, and no two distinct
/// bases A, B admit Σ k_a·a = Σ l_b·b with k, l ≥ 0 and positive weight on
/// some vertex outside A ∩ B. Restricting coefficients to faces shows this
/// is equivalent to the condition over all pairs of faces.
inline FaithfulnessReport faithfully_realizes(const Complex& c, unsigned threads = 1) {
  FaithfulnessReport report;
  const auto& bases = c.bases().items();
  for (const auto& basis : bases) {
    if (basis.empty()) continue;
    if (auto w = detail::dependence_witness(basis)) {
      report.faithful = false;
      report.witness = std::move(w);
      return report;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j)
      if (!bases[i].empty() && !bases[j].empty()) pairs.emplace_back(i, j);
  std::vector<std::optional<FaithfulnessWitness>> found(pairs.size());
  detail::parallel_for(pairs.size(), threads, [&](std::size_t p) {
    found[p] = detail::collision_witness(bases[pairs[p].first], bases[pairs[p].second]);
  });
  for (auto& f : found)
    if (f) {
      report.faithful = false;
      report.witness = std::move(f);
      break;
    }
  return report;
}

/// Rays (vertex coordinates, in canonical vertex order) and cones (bases as
/// sorted ray-index lists, in canonical basis order).
struct FanData {
  std::vector<std::vector<Integer>> rays;
  std::vector<std::vector<std::size_t>> cones;
};

inline FanData fan_export(const Complex& c, unsigned threads = 1) {
  auto report = faithfully_realizes(c, threads);
  if (!report.faithful) fail(ErrorKind::validation, "complex is not faithfully realized; its cones do not form a fan");
  FanData fan;
  const auto verts = c.vertices();
  for (const auto& v : verts) fan.rays.push_back(v.coeffs());
  for (const auto& b : c.bases()) {
    std::vector<std::size_t> cone;
    for (const auto& v : b) cone.push_back(static_cast<std::size_t>(verts.index_of(v)));
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

}  // namespace flatnest

#endif  // FLATNEST_FAN_HPP
