#ifndef FLATNEST_SORTED_SET_HPP
#define FLATNEST_SORTED_SET_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace flatnest {

/// A finite set stored as a sorted, duplicate-free vector.
///
/// Every set-valued object in the library (faces, hypergraphs, families of
/// constructions) is a SortedSet, so iteration order is the canonical order
/// of T and equality is plain element-wise equality. T needs operator< and
/// operator==.
template <class T>
class SortedSet {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;
  using iterator = const_iterator;
  using size_type = std::size_t;

  SortedSet() = default;
  SortedSet(std::initializer_list<T> items) : items_(items) { normalize(); }
  explicit SortedSet(std::vector<T> items) : items_(std::move(items)) { normalize(); }
  template <class It>
  SortedSet(It first, It last) : items_(first, last) {
    normalize();
  }

  /// Adopts an already sorted, duplicate-free vector without re-sorting.
  static SortedSet from_sorted(std::vector<T> items) {
    SortedSet s;
    s.items_ = std::move(items);
    return s;
  }

  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  size_type size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](size_type i) const { return items_[i]; }
  const T& front() const { return items_.front(); }
  const T& back() const { return items_.back(); }
  const std::vector<T>& items() const { return items_; }

  bool contains(const T& x) const { return std::binary_search(items_.begin(), items_.end(), x); }

  std::ptrdiff_t index_of(const T& x) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || !(*it == x)) return -1;
    return it - items_.begin();
  }

  bool is_subset_of(const SortedSet& other) const {
    return size() <= other.size() &&
           std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }

  bool intersects(const SortedSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        return true;
      }
    }
    return false;
  }

  SortedSet unite(const SortedSet& other) const {
    std::vector<T> out;
    out.reserve(size() + other.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  SortedSet intersect(const SortedSet& other) const {
    std::vector<T> out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  SortedSet minus(const SortedSet& other) const {
    std::vector<T> out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  SortedSet with(const T& x) const {
    std::vector<T> out = items_;
    auto it = std::lower_bound(out.begin(), out.end(), x);
    if (it == out.end() || !(*it == x)) out.insert(it, x);
    return from_sorted(std::move(out));
  }

  SortedSet without(const T& x) const {
    std::vector<T> out = items_;
    auto it = std::lower_bound(out.begin(), out.end(), x);
    if (it != out.end() && *it == x) out.erase(it);
    return from_sorted(std::move(out));
  }

  friend bool operator==(const SortedSet& a, const SortedSet& b) { return a.items_ == b.items_; }
  friend bool operator!=(const SortedSet& a, const SortedSet& b) { return !(a == b); }
  friend bool operator<(const SortedSet& a, const SortedSet& b) {
    return std::lexicographical_compare(a.items_.begin(), a.items_.end(), b.items_.begin(),
                                        b.items_.end());
  }
  friend bool operator>(const SortedSet& a, const SortedSet& b) { return b < a; }
  friend bool operator<=(const SortedSet& a, const SortedSet& b) { return !(b < a); }
  friend bool operator>=(const SortedSet& a, const SortedSet& b) { return !(a < b); }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<T> items_;
};

/// Union of all members of a family of sets.
template <class T>
SortedSet<T> union_of(const SortedSet<SortedSet<T>>& family) {
  std::vector<T> all;
  for (const auto& member : family) all.insert(all.end(), member.begin(), member.end());
  return SortedSet<T>(std::move(all));
}

/// The ⊆-maximal members of a family.
template <class T>
SortedSet<SortedSet<T>> maximal_members(const SortedSet<SortedSet<T>>& family) {
  std::vector<SortedSet<T>> out;
  for (const auto& a : family) {
    bool dominated = false;
    for (const auto& b : family) {
      if (a.size() < b.size() && a.is_subset_of(b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return SortedSet<SortedSet<T>>::from_sorted(std::move(out));
}

/// The ⊆-minimal members of a family.
template <class T>
SortedSet<SortedSet<T>> minimal_members(const SortedSet<SortedSet<T>>& family) {
  std::vector<SortedSet<T>> out;
  for (const auto& a : family) {
    bool dominates = false;
    for (const auto& b : family) {
      if (b.size() < a.size() && b.is_subset_of(a)) {
        dominates = true;
        break;
      }
    }
    if (!dominates) out.push_back(a);
  }
  return SortedSet<SortedSet<T>>::from_sorted(std::move(out));
}

}  // namespace flatnest

#endif  // FLATNEST_SORTED_SET_HPP
