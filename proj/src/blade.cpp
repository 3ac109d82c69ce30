#include "gakit/blade.hpp"

#include <algorithm>
#include <string>

#include "gakit/error.hpp"

namespace gakit {

BladeMask blade_from_indices(std::span<const int> indices, int n) {
  BladeMask mask = 0;
  int prev = 0;
  for (int idx : indices) {
    if (idx < 1 || idx > n) {
      throw ArgumentError("basis index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    }
    if (idx <= prev) {
      throw ArgumentError("blade indices must be strictly ascending");
    }
    mask |= BladeMask{1} << (idx - 1);
    prev = idx;
  }
  return mask;
}

std::vector<int> indices_of(BladeMask m) {
  std::vector<int> out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (m & 1U) out.push_back(i + 1);
  }
  return out;
}

GradeSet GradeSet::all(int n) {
  GradeSet s;
  for (int k = 0; k <= n; ++k) s.insert(k);
  return s;
}

GradeSet GradeSet::of(std::initializer_list<int> grades) {
  GradeSet s;
  for (int k : grades) s.insert(k);
  return s;
}

GradeSet& GradeSet::insert(int k) {
  if (k < 0 || k > kMaxDim) throw ArgumentError("grade out of range: " + std::to_string(k));
  bits_ |= 1U << k;
  return *this;
}

int generalized_kronecker(std::span<const int> upper, std::span<const int> lower) {
  if (upper.size() != lower.size()) {
    throw ArgumentError("generalized Kronecker symbol needs index lists of equal length");
  }
  for (int i : upper) {
    if (i < 1) throw ArgumentError("indices are 1-based");
  }
  for (int i : lower) {
    if (i < 1) throw ArgumentError("indices are 1-based");
  }
  // Nonzero only when lower is a permutation of distinct upper; the value is its parity.
  const std::size_t k = upper.size();
  std::vector<int> perm(k);
  for (std::size_t b = 0; b < k; ++b) {
    auto it = std::find(upper.begin(), upper.end(), lower[b]);
    if (it == upper.end()) return 0;
    perm[b] = static_cast<int>(it - upper.begin());
  }
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (seen[p]) return 0;
    seen[p] = true;
  }
  int sign = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

} // namespace gakit
