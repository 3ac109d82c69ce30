#pragma once

#include <span>
#include <vector>

#include "gakit/blade.hpp"

namespace gakit {

/// Element of the exterior algebra over an n-dimensional space, stored densely as one
/// coefficient per canonical blade (index = blade mask).
class Multivector {
public:
  /// The zero multivector. Throws ArgumentError unless 1 <= n <= kMaxDim.
  explicit Multivector(int n);

  static Multivector scalar(int n, double value);
  /// e_index, 1-based.
  static Multivector basis_vector(int n, int index);
  static Multivector blade(int n, BladeMask mask, double coeff = 1.0);
  /// Grade-1 element sum_k coords[k] e_{k+1}; coords.size() must equal n.
  static Multivector vector(int n, std::span<const double> coords);
  /// Pseudoscalar e_1 ^ ... ^ e_n.
  static Multivector unit_pseudoscalar(int n);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  double operator[](BladeMask m) const { return coeffs_[m]; }
  double& operator[](BladeMask m) { return coeffs_[m]; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  double scalar_part() const noexcept { return coeffs_[0]; }
  /// Grade-1 coordinates (length n).
  std::vector<double> vector_part() const;

  double max_abs() const noexcept;
  bool is_zero() const noexcept;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s) noexcept;

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

  bool operator==(const Multivector&) const = default;

private:
  int dim_;
  std::vector<double> coeffs_;
};

/// Largest absolute coefficient difference. Throws ArgumentError on dimension mismatch.
double max_abs_diff(const Multivector& a, const Multivector& b);

/// Throws ArgumentError when the dimensions differ.
void require_same_dim(const Multivector& a, const Multivector& b);

Multivector grade_project(const Multivector& x, int k);

enum class Involution { grade, reverse, conjugate };

/// Per grade k the coefficient is multiplied by (-1)^k, (-1)^{k(k-1)/2} or (-1)^{k(k+1)/2}.
Multivector involution(const Multivector& x, Involution kind);

inline Multivector grade_involution(const Multivector& x) { return involution(x, Involution::grade); }
inline Multivector reverse(const Multivector& x) { return involution(x, Involution::reverse); }
inline Multivector conjugate(const Multivector& x) { return involution(x, Involution::conjugate); }

} // namespace gakit
