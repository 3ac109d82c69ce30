#pragma once

#include <vector>

#include "gakit/extensor.hpp"
#include "gakit/matrix.hpp"
#include "gakit/multivector.hpp"

namespace gakit {

/// Eigenvalues within this distance of zero, or |det G| below it, mark a metric as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-10;
/// Largest |G_jk - G_kj| accepted from external input.
inline constexpr double kSymmetryTolerance = 1e-12;

struct Signature {
  int p = 0;
  int q = 0;
  bool operator==(const Signature&) const = default;
};

/// Symmetric nondegenerate coefficients G_jk = G(e_j, e_k) in the fiducial basis.
class MetricTensor {
public:
  /// Rejects non-square input, asymmetry beyond kSymmetryTolerance (ArgumentError), and
  /// |det| <= kDegeneracyTolerance (DegeneracyError). Stores the exactly symmetrized matrix.
  explicit MetricTensor(const Matrix& g);
  static MetricTensor identity(int n);
  static MetricTensor diagonal(std::span<const double> d);

  int dim() const noexcept { return g_.rows(); }
  const Matrix& matrix() const noexcept { return g_; }
  double operator()(int j, int k) const { return g_(j, k); }

private:
  Matrix g_;
};

/// The metric operator g with g(v) . w = G(v, w). Inverse, determinant, eigensystem and
/// signature are computed once at construction.
class MetricExtensor {
public:
  explicit MetricExtensor(const MetricTensor& g);
  /// Throws ArgumentError if op is not symmetric within kSymmetryTolerance.
  static MetricExtensor from_operator(const LinOp11& op);

  int dim() const noexcept { return op_.dim(); }
  const LinOp11& op() const noexcept { return op_; }
  const LinOp11& inverse_op() const noexcept { return inverse_; }
  double det() const noexcept { return det_; }
  Signature signature() const noexcept { return signature_; }
  const SymmetricEigen& eigen() const noexcept { return eigen_; }
  bool is_identity() const noexcept { return identity_; }

private:
  LinOp11 op_;
  LinOp11 inverse_;
  double det_ = 1.0;
  Signature signature_;
  SymmetricEigen eigen_;
  bool identity_ = false;
};

MetricExtensor metric_extensor_from_G(const MetricTensor& g);
MetricExtensor metric_inverse(const MetricExtensor& g);

/// e^k = G^{ks} e_s, so that G(e^k, e_j) = delta^k_j. Entry k holds fiducial coordinates.
std::vector<Vector> reciprocal_basis(const MetricTensor& g);

/// extend(g)(X) . Y.
double scalar_product_g(const Multivector& x, const Multivector& y, const MetricExtensor& g);

/// extend(g)(X) _| Y.
Multivector contract_left_g(const Multivector& x, const Multivector& y, const MetricExtensor& g);
/// X |_ extend(g)(Y).
Multivector contract_right_g(const Multivector& x, const Multivector& y, const MetricExtensor& g);

/// Geometric product of the metric algebra. Each left blade is peeled one vector factor at a
/// time via e_i ^ B = e_i B - e_i _|_g B, with products of blades against Y memoized.
Multivector clifford_product_g(const Multivector& x, const Multivector& y, const MetricExtensor& g);

Signature signature(const MetricExtensor& g);

} // namespace gakit
