#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "g2lab/errors.hpp"

namespace g2lab {

// Strictly increasing index tuple out of {1, ..., 9}, stored as a bitmask.
// Bit k-1 set means index k is present; the empty tuple indexes scalars.
class MultiIndex {
 public:
  MultiIndex() = default;

  static MultiIndex empty() { return MultiIndex(); }

  static MultiIndex single(int k) {
    check_index(k);
    return MultiIndex(1u << (k - 1));
  }

  static MultiIndex from_indices(const std::vector<int>& idx) {
    std::uint32_t m = 0;
    int prev = 0;
    for (int k : idx) {
      check_index(k);
      if (k <= prev) throw IndexError("indices must be strictly increasing");
      m |= 1u << (k - 1);
      prev = k;
    }
    return MultiIndex(m);
  }

  static MultiIndex from_indices(std::initializer_list<int> idx) {
    return from_indices(std::vector<int>(idx));
  }

  static MultiIndex full(int n) {
    check_dim(n);
    return MultiIndex((1u << n) - 1u);
  }

  int degree() const { return std::popcount(mask_); }
  bool contains(int k) const {
    check_index(k);
    return (mask_ >> (k - 1)) & 1u;
  }
  std::uint32_t mask() const { return mask_; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (int k = 1; k <= 9; ++k)
      if ((mask_ >> (k - 1)) & 1u) out.push_back(k);
    return out;
  }

  MultiIndex complement(int n) const {
    check_dim(n);
    std::uint32_t all = (1u << n) - 1u;
    if (mask_ & ~all) throw IndexError("multi-index exceeds ambient dimension");
    return MultiIndex(all & ~mask_);
  }

  MultiIndex insert(int k) const {
    check_index(k);
    if (contains(k)) throw IndexError("index already present");
    return MultiIndex(mask_ | (1u << (k - 1)));
  }

  MultiIndex remove(int k) const {
    if (!contains(k)) throw IndexError("index not present");
    return MultiIndex(mask_ & ~(1u << (k - 1)));
  }

  MultiIndex unite(const MultiIndex& o) const {
    if (mask_ & o.mask_) throw IndexError("multi-indices overlap");
    return MultiIndex(mask_ | o.mask_);
  }

  // Count of present indices strictly below k; the sign of moving e^k past
  // the leading factors is (-1)^count_below(k).
  int count_below(int k) const {
    check_index(k);
    return std::popcount(mask_ & ((1u << (k - 1)) - 1u));
  }

  // Sign of sorting the concatenation (a, b) into increasing order.
  // Returns 0 when the tuples overlap.
  static int merge_sign(const MultiIndex& a, const MultiIndex& b) {
    if (a.mask_ & b.mask_) return 0;
    int inversions = 0;
    for (int k = 1; k <= 9; ++k)
      if ((b.mask_ >> (k - 1)) & 1u)
        inversions += std::popcount(a.mask_ & ~((1u << k) - 1u));
    return inversions % 2 == 0 ? 1 : -1;
  }

  bool operator==(const MultiIndex& o) const = default;

  // Graded order: by degree, then lexicographically on the index sequence.
  bool operator<(const MultiIndex& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // For equal degree, lexicographic order on increasing sequences matches
    // numeric order of the bit-reversed masks; compare sequences directly.
    std::uint32_t x = mask_, y = o.mask_;
    while (x && y) {
      int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return false;
  }

  std::string str() const {
    std::string s;
    for (int k : indices()) s += static_cast<char>('0' + k);
    return s;
  }

 private:
  explicit MultiIndex(std::uint32_t m) : mask_(m) {}
  static void check_index(int k) {
    if (k < 1 || k > 9) throw IndexError("index out of range 1..9: " + std::to_string(k));
  }
  static void check_dim(int n) {
    if (n < 1 || n > 9) throw DimensionError("dimension out of range 1..9: " + std::to_string(n));
  }
  std::uint32_t mask_ = 0;
};

}  // namespace g2lab
