#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace plectic6 {

// Largest ambient dimension supported by the dense form layout.
inline constexpr int kMaxDimension = 24;

using IndexMask = std::uint32_t;

std::size_t binomial(int n, int k);

// Strictly increasing 1-based indices (i1 < i2 < ... < ik), the label of the
// basis monomial dx^{i1} ^ ... ^ dx^{ik}. Ordered lexicographically.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> indices);
  explicit MultiIndex(std::vector<int> indices);

  static MultiIndex from_mask(IndexMask mask);

  std::size_t size() const noexcept { return indices_.size(); }
  int operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }

  bool fits(int dimension) const noexcept;
  IndexMask mask() const noexcept;
  std::string to_string() const;  // "135", or "1,10,12" when n > 9

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> indices_;
};

namespace detail {

// Position of a k-subset (bit i = index i+1) in lexicographic order.
std::size_t lex_rank(IndexMask mask, int n, int k);

// All k-subsets of {1..n} in lexicographic order. Cached for small n.
const std::vector<IndexMask>& subsets(int n, int k);

// Number of pairs (i in a, j in b) with i > j: the transposition parity of
// merging the concatenation a|b into sorted order.
inline int merge_inversions(IndexMask a, IndexMask b) {
  int count = 0;
  while (b != 0) {
    const int j = __builtin_ctz(b);
    b &= b - 1;
    count += __builtin_popcount(a >> (j + 1));
  }
  return count;
}

}  // namespace detail

}  // namespace plectic6
