#include "plectic6/multi_index.hpp"

#include <array>
#include <mutex>

#include "plectic6/error.hpp"

namespace plectic6 {

namespace {

constexpr int kCachedDimension = 10;

using BinomialTable = std::array<std::array<std::size_t, kMaxDimension + 1>, kMaxDimension + 1>;

constexpr BinomialTable make_binomials() {
  BinomialTable t{};
  for (int n = 0; n <= kMaxDimension; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr BinomialTable kBinomials = make_binomials();

std::vector<IndexMask> enumerate_subsets(int n, int k) {
  std::vector<IndexMask> out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    IndexMask m = 0;
    for (int i : idx) m |= IndexMask{1} << i;
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct SubsetCache {
  std::array<std::array<std::vector<IndexMask>, kCachedDimension + 1>, kCachedDimension + 1> table;
  SubsetCache() {
    for (int n = 0; n <= kCachedDimension; ++n)
      for (int k = 0; k <= n; ++k) table[n][k] = enumerate_subsets(n, k);
  }
};

}  // namespace

std::size_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > kMaxDimension) return 0;
  return kBinomials[n][k];
}

MultiIndex::MultiIndex(std::initializer_list<int> indices) : MultiIndex(std::vector<int>(indices)) {}

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > kMaxDimension)
      throw InputError("multi-index entry " + std::to_string(indices_[i]) + " out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1])
      throw InputError("multi-index must be strictly increasing");
  }
}

MultiIndex MultiIndex::from_mask(IndexMask mask) {
  std::vector<int> v;
  while (mask != 0) {
    v.push_back(__builtin_ctz(mask) + 1);
    mask &= mask - 1;
  }
  MultiIndex out;
  out.indices_ = std::move(v);
  return out;
}

bool MultiIndex::fits(int dimension) const noexcept {
  return indices_.empty() || indices_.back() <= dimension;
}

IndexMask MultiIndex::mask() const noexcept {
  IndexMask m = 0;
  for (int i : indices_) m |= IndexMask{1} << (i - 1);
  return m;
}

std::string MultiIndex::to_string() const {
  const bool wide = !indices_.empty() && indices_.back() > 9;
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

namespace detail {

std::size_t lex_rank(IndexMask mask, int n, int k) {
  std::size_t rank = 0;
  int prev = -1;
  int i = 1;
  while (mask != 0) {
    const int a = __builtin_ctz(mask);
    mask &= mask - 1;
    for (int j = prev + 1; j < a; ++j) rank += kBinomials[n - 1 - j][k - i];
    prev = a;
    ++i;
  }
  return rank;
}

const std::vector<IndexMask>& subsets(int n, int k) {
  if (n <= kCachedDimension) {
    static const SubsetCache cache;
    return cache.table[n][k];
  }
  static std::mutex mutex;
  static std::array<std::array<std::vector<IndexMask>, kMaxDimension + 1>, kMaxDimension + 1> large;
  std::lock_guard lock(mutex);
  auto& slot = large[n][k];
  if (slot.empty()) slot = enumerate_subsets(n, k);
  return slot;
}

}  // namespace detail

}  // namespace plectic6
