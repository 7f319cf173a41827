#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ellarr {

/// A subset of {0, ..., 63}, used for divisor index sets and for exterior
/// monomials in the H^1 generators.
class IndexSet {
 public:
  static constexpr std::size_t capacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  static IndexSet of(std::initializer_list<std::size_t> items) {
    IndexSet s;
    for (std::size_t i : items) s = s.with(i);
    return s;
  }
  static IndexSet from_vector(const std::vector<std::size_t>& items) {
    IndexSet s;
    for (std::size_t i : items) s = s.with(i);
    return s;
  }
  static constexpr IndexSet range(std::size_t n) {
    return IndexSet(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr IndexSet with(std::size_t i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }

  /// Smallest element; undefined on the empty set.
  constexpr std::size_t min() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  /// Number of elements of this set strictly less than i.
  constexpr std::size_t count_below(std::size_t i) const {
    return i >= capacity ? size()
                         : static_cast<std::size_t>(std::popcount(bits_ & ((std::uint64_t{1} << i) - 1)));
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  constexpr bool operator==(const IndexSet&) const = default;

  /// Lexicographic order of the increasing element lists.
  friend bool lex_less(IndexSet a, IndexSet b) {
    while (!a.empty() && !b.empty()) {
      std::size_t x = a.min(), y = b.min();
      if (x != y) return x < y;
      a = a.without(x);
      b = b.without(y);
    }
    return a.empty() && !b.empty();
  }

  /// Total order used for map keys (not lexicographic).
  constexpr auto operator<=>(const IndexSet& o) const { return bits_ <=> o.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Sign of the permutation that sorts the concatenation a ++ b of two
/// increasing sequences into increasing order. Requires a and b disjoint.
inline int merge_sign(IndexSet a, IndexSet b) {
  std::size_t inversions = 0;
  for (std::uint64_t bb = b.bits(); bb != 0; bb &= bb - 1) {
    std::size_t j = static_cast<std::size_t>(std::countr_zero(bb));
    inversions += static_cast<std::size_t>(std::popcount((a.bits() >> j) >> 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// Visits the k-element subsets of `universe` in lexicographic order. The
/// visitor returns false to stop early; the return value reports whether the
/// enumeration ran to completion.
inline bool for_each_subset(IndexSet universe, std::size_t k,
                            const std::function<bool(IndexSet)>& visit) {
  const std::vector<std::size_t> items = universe.elements();
  if (k > items.size()) return true;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    IndexSet s;
    for (std::size_t i : pick) s = s.with(items[i]);
    if (!visit(s)) return false;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Renders as {1,3,4} using 1-based labels.
inline std::string to_label(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.elements()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace ellarr
