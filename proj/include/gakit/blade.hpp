#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace gakit {

/// Maximum supported dimension of the underlying vector space.
inline constexpr int kMaxDim = 12;

/// Canonical basis blade: bit i set means e_{i+1} is a factor, factors in ascending order.
/// Mask 0 is the scalar blade.
using BladeMask = std::uint32_t;

constexpr int grade_of(BladeMask m) noexcept { return std::popcount(m); }

constexpr std::size_t blade_count(int n) noexcept { return std::size_t{1} << n; }

/// Sign of bringing the concatenation e_A e_B into canonical order: (-1)^s where s counts
/// the pairs (i in a, j in b) with i > j.
constexpr int canonical_reorder_sign(BladeMask a, BladeMask b) noexcept {
  a >>= 1;
  int swaps = 0;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

/// Builds a mask from 1-based strictly ascending indices. Throws ArgumentError otherwise,
/// or when an index exceeds n.
BladeMask blade_from_indices(std::span<const int> indices, int n);

/// 1-based ascending indices of the factors of a blade.
std::vector<int> indices_of(BladeMask m);

/// A subset of grades {0..n}; the empty set is the trivial subspace.
class GradeSet {
public:
  GradeSet() = default;
  static GradeSet all(int n);
  static GradeSet of(std::initializer_list<int> grades);

  GradeSet& insert(int k);
  bool contains(int k) const noexcept { return k >= 0 && k <= kMaxDim && ((bits_ >> k) & 1U); }
  bool empty() const noexcept { return bits_ == 0; }
  GradeSet intersect(const GradeSet& other) const { return GradeSet(bits_ & other.bits_); }
  bool operator==(const GradeSet&) const = default;

private:
  explicit GradeSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// Determinant of the k x k matrix [delta^{upper_a}_{lower_b}]; always -1, 0 or +1.
/// Indices are 1-based. Lists of different length throw ArgumentError.
int generalized_kronecker(std::span<const int> upper, std::span<const int> lower);

} // namespace gakit
