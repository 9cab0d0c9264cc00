#ifndef FLATNEST_EXACT_HPP
#define FLATNEST_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "flatnest/error.hpp"
#include "flatnest/ground.hpp"

namespace flatnest {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

struct RowEchelon {
  RationalMatrix m;                 // reduced row echelon form of [A | b]
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Gauss-Jordan elimination over the first `cols` columns of `m`.
inline RowEchelon reduce(RationalMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  const std::size_t rows = m.size();
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace detail

/// The matrix whose columns are the given coefficient vectors.
inline RationalMatrix columns_matrix(std::span<const SumVec> vectors) {
  if (vectors.empty()) return {};
  const std::size_t dim = vectors.front().dim();
  RationalMatrix m(dim, std::vector<Rational>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].dim() != dim) fail(ErrorKind::invalid_argument, "vectors of different length");
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = Rational(vectors[j][i]);
  }
  return m;
}

inline std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  return detail::reduce(m, m.front().size()).pivots.size();
}

inline bool linearly_independent(std::span<const SumVec> vectors) {
  return rank(columns_matrix(vectors)) == vectors.size();
}

/// A nonzero x with A·x = 0, or nothing when the columns are independent.
inline std::optional<std::vector<Rational>> kernel_vector(const RationalMatrix& a, std::size_t cols) {
  auto e = detail::reduce(a, cols);
  std::vector<char> is_pivot(cols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::size_t free_col = cols;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  if (free_col == cols) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  x[free_col] = 1;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.m[r][free_col];
  return x;
}

/// Solves A·x = b for A of full column rank. Nothing when inconsistent.
inline std::optional<std::vector<Rational>> solve_unique(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) fail(ErrorKind::invalid_argument, "right-hand side length mismatch");
  const std::size_t cols = rows ? a.front().size() : 0;
  RationalMatrix aug(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  auto e = detail::reduce(std::move(aug), cols);
  if (e.pivots.size() != cols) fail(ErrorKind::validation, "linear system is not of full column rank");
  for (std::size_t r = e.pivots.size(); r < rows; ++r)
    if (e.m[r][cols] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < cols; ++r) x[e.pivots[r]] = e.m[r][cols];
  return x;
}

}  // namespace flatnest

#endif  // FLATNEST_EXACT_HPP
