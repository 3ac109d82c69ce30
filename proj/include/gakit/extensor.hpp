#pragma once

#include <span>
#include <vector>

#include "gakit/blade.hpp"
#include "gakit/matrix.hpp"
#include "gakit/multivector.hpp"

namespace gakit {

using Vector = std::vector<double>;

class MetricExtensor;

/// A (1,1)-extensor, i.e. a linear operator on V, held as its matrix in the orthonormal
/// fiducial basis: matrix()(k, j) = e_{k+1} . t(e_{j+1}), so column j is the image of e_{j+1}.
class LinOp11 {
public:
  /// Throws ArgumentError unless the matrix is square with 1 <= n <= kMaxDim.
  explicit LinOp11(Matrix m);
  static LinOp11 identity(int n);
  /// images[j] = t(e_{j+1}) in fiducial coordinates (the JSON "rows = images" layout).
  static LinOp11 from_images(const std::vector<Vector>& images);

  int dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// t(e_{j+1}), j 0-based.
  Vector image(int j) const { return matrix_.column(j); }
  Vector apply(std::span<const double> v) const { return matrix_.apply(v); }
  /// Applies t to the grade-1 part of v; throws ArgumentError if v has other grades.
  Multivector apply(const Multivector& v) const;

  /// Composition s o t.
  friend LinOp11 operator*(const LinOp11& s, const LinOp11& t) { return LinOp11(s.matrix_ * t.matrix_); }
  friend LinOp11 operator+(const LinOp11& a, const LinOp11& b) { return LinOp11(a.matrix_ + b.matrix_); }
  friend LinOp11 operator-(const LinOp11& a, const LinOp11& b) { return LinOp11(a.matrix_ - b.matrix_); }
  friend LinOp11 operator*(double s, const LinOp11& a) { return LinOp11(s * a.matrix_); }

private:
  Matrix matrix_;
};

double max_abs_diff(const LinOp11& a, const LinOp11& b);

/// Materialization limit for GeneralExtensor (2^8 x 2^8 coefficients).
inline constexpr int kMaxMaterializedDim = 8;

/// A linear map on the whole exterior algebra as a 2^n x 2^n array over canonical blades:
/// matrix()(K, J) = e_K . T(e_J).
class GeneralExtensor {
public:
  /// Throws ArgumentError when n > kMaxMaterializedDim or the matrix shape is not 2^n x 2^n.
  GeneralExtensor(int n, Matrix m);
  static GeneralExtensor identity(int n);

  /// Materializes a linear function column by column from its action on basis blades.
  template <typename F>
  static GeneralExtensor from_action(int n, F&& action) {
    GeneralExtensor out = identity(n);
    const auto size = static_cast<BladeMask>(blade_count(n));
    for (BladeMask j = 0; j < size; ++j) {
      const Multivector col = action(Multivector::blade(n, j));
      for (BladeMask k = 0; k < size; ++k) out.matrix_(static_cast<int>(k), static_cast<int>(j)) = col[k];
    }
    return out;
  }

  int dim() const noexcept { return dim_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  Multivector apply(const Multivector& x) const;

  friend GeneralExtensor operator*(const GeneralExtensor& s, const GeneralExtensor& t);

private:
  int dim_;
  Matrix matrix_;
};

double max_abs_diff(const GeneralExtensor& a, const GeneralExtensor& b);

/// Outermorphism: alpha -> alpha, v -> t(v), v1^...^vk -> t(v1)^...^t(vk).
GeneralExtensor extend(const LinOp11& t);
/// Same map applied without materializing; works for any n.
Multivector apply_extended(const LinOp11& t, const Multivector& x);

/// Transpose, since the fiducial basis is orthonormal.
LinOp11 adjoint(const LinOp11& t);
GeneralExtensor adjoint_general(const GeneralExtensor& t);

LinOp11 symmetric_part(const LinOp11& t);
LinOp11 skew_part(const LinOp11& t);

/// Derivation X -> t(e^k) ^ (e_k _| X).
GeneralExtensor generalize(const LinOp11& t);
Multivector apply_generalized(const LinOp11& t, const Multivector& x);

/// t(e^k) ^ e_k.
Multivector bivector_of(const LinOp11& t);

/// Coefficient of the image of the unit pseudoscalar.
double determinant(const LinOp11& t);

/// Adjugate formula t^{-1}(v) = det^{-1}[t] extend(t^T)(v I) I^{-1}.
/// Throws SingularityError when |det| <= 1e-12 * max(1, max|t_jk|)^n.
LinOp11 inverse(const LinOp11& t);

/// Sum of grade projections over the grades in s.
Multivector projector(const Multivector& x, const GradeSet& s);

/// Covariant components t_{J;K} = T(e_J) . e_K over canonical blades.
class ComponentTable {
public:
  ComponentTable(int n, Matrix values);
  int dim() const noexcept { return dim_; }
  double at(BladeMask j, BladeMask k) const { return values_(static_cast<int>(j), static_cast<int>(k)); }
  const Matrix& values() const noexcept { return values_; }

private:
  int dim_;
  Matrix values_;
};

ComponentTable components(const GeneralExtensor& t);
GeneralExtensor reconstruct(const ComponentTable& c);

/// g^{-1} o t^T o g, the adjoint with respect to the g-scalar product.
LinOp11 metric_adjoint(const LinOp11& t, const MetricExtensor& g);

/// Whether max|L^T eta L - eta| < 1e-9.
bool is_metric_orthogonal(const LinOp11& lambda, const MetricExtensor& eta);

} // namespace gakit
