#ifndef FLATNEST_GROUND_HPP
#define FLATNEST_GROUND_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flatnest/error.hpp"

namespace flatnest {

using Integer = boost::multiprecision::cpp_int;

/// A linearly ordered finite set of atom labels.
///
/// Labels are non-empty, start with a letter or underscore, and contain no
/// whitespace, '+', ',' or braces, so that symbolic sums and curly-brace
/// renderings stay unambiguous.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const std::string& a = atoms_[i];
      if (!valid_label(a)) fail(ErrorKind::invalid_argument, "invalid atom label '" + a + "'");
      if (!index_.emplace(a, i).second)
        fail(ErrorKind::invalid_argument, "duplicate atom label '" + a + "'");
    }
  }

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& label(std::size_t i) const { return atoms_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view label) const {
    auto i = find(label);
    if (!i) fail(ErrorKind::invalid_argument, "unknown atom label '" + std::string(label) + "'");
    return *i;
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.atoms_ == b.atoms_; }

  static bool valid_label(std::string_view a) {
    if (a.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(a[0])) || a[0] == '_')) return false;
    for (char ch : a) {
      auto c = static_cast<unsigned char>(ch);
      if (std::isspace(c) || ch == '+' || ch == ',' || ch == '{' || ch == '}' || ch == '"')
        return false;
    }
    return true;
  }

 private:
  std::vector<std::string> atoms_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A formal sum over the ground set, as its coefficient vector.
///
/// Coefficients are non-negative and not all zero. Ordering compares the
/// last coordinate first (colexicographic), which lists x < y < x+y < z
/// for x < y < z, the way faces are written by hand.
class SumVec {
 public:
  SumVec() = default;

  explicit SumVec(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    bool positive = false;
    for (const auto& c : coeffs_) {
      if (c < 0) fail(ErrorKind::invalid_argument, "negative coefficient in formal sum");
      if (c > 0) positive = true;
    }
    if (!positive) fail(ErrorKind::invalid_argument, "formal sum has no positive coefficient");
  }

  static SumVec unit(std::size_t dim, std::size_t i) {
    if (i >= dim) fail(ErrorKind::invalid_argument, "unit vector index out of range");
    std::vector<Integer> c(dim, 0);
    c[i] = 1;
    return SumVec(std::move(c));
  }

  std::size_t dim() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// Sum of all coefficients.
  Integer weight() const {
    Integer w = 0;
    for (const auto& c : coeffs_) w += c;
    return w;
  }

  /// True when exactly one coefficient is 1 and the rest are 0.
  bool is_unit() const {
    int ones = 0;
    for (const auto& c : coeffs_) {
      if (c > 1) return false;
      if (c == 1) ++ones;
    }
    return ones == 1;
  }

  SumVec& operator+=(const SumVec& other) {
    if (other.dim() != dim()) fail(ErrorKind::invalid_argument, "adding formal sums of different length");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }

  friend SumVec operator+(SumVec a, const SumVec& b) { return a += b; }

  friend bool operator==(const SumVec& a, const SumVec& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const SumVec& a, const SumVec& b) { return !(a == b); }
  friend bool operator<(const SumVec& a, const SumVec& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = a.dim(); i-- > 0;) {
      if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
  }
  friend bool operator>(const SumVec& a, const SumVec& b) { return b < a; }
  friend bool operator<=(const SumVec& a, const SumVec& b) { return !(b < a); }
  friend bool operator>=(const SumVec& a, const SumVec& b) { return !(a < b); }

 private:
  std::vector<Integer> coeffs_;
};

inline SumVec atom_vec(const GroundSet& g, std::string_view label) {
  return SumVec::unit(g.size(), g.index(label));
}

/// Componentwise sum of a nonempty collection of formal sums.
inline SumVec vec_sum(std::span<const SumVec> items) {
  if (items.empty()) fail(ErrorKind::invalid_argument, "sum of an empty collection");
  SumVec total = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) total += items[i];
  return total;
}

template <class Range>
SumVec vec_sum(const Range& items) {
  std::vector<SumVec> v(items.begin(), items.end());
  return vec_sum(std::span<const SumVec>(v));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses `term ("+" term)*` with `term = [coefficient] label`.
inline SumVec parse_sum(const GroundSet& g, std::string_view text) {
  std::vector<Integer> coeffs(g.size(), 0);
  std::string_view rest = text;
  bool any_term = false;
  while (true) {
    auto plus = rest.find('+');
    std::string_view term = detail::trim(rest.substr(0, plus));
    if (term.empty()) fail(ErrorKind::parse, "malformed sum '" + std::string(text) + "': empty term");
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    Integer coefficient = 1;
    if (digits > 0) coefficient = Integer(std::string(term.substr(0, digits)));
    std::string_view label = detail::trim(term.substr(digits));
    if (label.empty())
      fail(ErrorKind::parse, "malformed sum '" + std::string(text) + "': term without a label");
    auto idx = g.find(label);
    if (!idx) fail(ErrorKind::parse, "unknown atom label '" + std::string(label) + "' in '" + std::string(text) + "'");
    if (coefficient == 0)
      fail(ErrorKind::parse, "malformed sum '" + std::string(text) + "': zero coefficient");
    coeffs[*idx] += coefficient;
    any_term = true;
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  if (!any_term) fail(ErrorKind::parse, "empty sum");
  return SumVec(std::move(coeffs));
}

/// Renders in ground-set order, e.g. "6x+5y+3z"; zero terms and unit
/// coefficients are omitted.
inline std::string format_sum(const GroundSet& g, const SumVec& v) {
  if (v.dim() != g.size()) fail(ErrorKind::invalid_argument, "formal sum does not match ground set");
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (v[i] != 1) out += v[i].str();
    out += g.label(i);
  }
  return out;
}

}  // namespace flatnest

#endif  // FLATNEST_GROUND_HPP
