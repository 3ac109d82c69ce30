#include "gakit/extensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"
#include "gakit/error.hpp"
#include "gakit/euclidean.hpp"
#include "gakit/metric.hpp"

namespace gakit {

LinOp11::LinOp11(Matrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square() || matrix_.rows() < 1 || matrix_.rows() > kMaxDim) {
    throw ArgumentError("a (1,1)-extensor needs a square matrix of size 1.." + std::to_string(kMaxDim));
  }
}

LinOp11 LinOp11::identity(int n) { return LinOp11(Matrix::identity(n)); }

LinOp11 LinOp11::from_images(const std::vector<Vector>& images) {
  return LinOp11(Matrix::from_rows(images).transpose());
}

Multivector LinOp11::apply(const Multivector& v) const {
  if (v.dim() != dim()) throw ArgumentError("operator/vector dimension mismatch");
  for (BladeMask m = 0; m < v.size(); ++m) {
    if (grade_of(m) != 1 && v[m] != 0.0) throw ArgumentError("a (1,1)-extensor acts on vectors only");
  }
  return Multivector::vector(dim(), apply(v.vector_part()));
}

double max_abs_diff(const LinOp11& a, const LinOp11& b) { return max_abs_diff(a.matrix(), b.matrix()); }

GeneralExtensor::GeneralExtensor(int n, Matrix m) : dim_(n), matrix_(std::move(m)) {
  if (n < 1 || n > kMaxMaterializedDim) {
    throw ArgumentError("general extensors are materialized only for 1 <= n <= " +
                        std::to_string(kMaxMaterializedDim));
  }
  const int size = static_cast<int>(blade_count(n));
  if (matrix_.rows() != size || matrix_.cols() != size) throw ArgumentError("general extensor must be 2^n x 2^n");
}

GeneralExtensor GeneralExtensor::identity(int n) {
  if (n < 1 || n > kMaxMaterializedDim) {
    throw ArgumentError("general extensors are materialized only for 1 <= n <= " +
                        std::to_string(kMaxMaterializedDim));
  }
  return GeneralExtensor(n, Matrix::identity(static_cast<int>(blade_count(n))));
}

Multivector GeneralExtensor::apply(const Multivector& x) const {
  if (x.dim() != dim_) throw ArgumentError("extensor/multivector dimension mismatch");
  const std::vector<double> out = matrix_.apply(x.coeffs());
  Multivector y(dim_);
  for (BladeMask m = 0; m < y.size(); ++m) y[m] = out[m];
  return y;
}

GeneralExtensor operator*(const GeneralExtensor& s, const GeneralExtensor& t) {
  if (s.dim_ != t.dim_) throw ArgumentError("extensor dimension mismatch");
  return GeneralExtensor(s.dim_, s.matrix_ * t.matrix_);
}

double max_abs_diff(const GeneralExtensor& a, const GeneralExtensor& b) {
  return max_abs_diff(a.matrix(), b.matrix());
}

GeneralExtensor extend(const LinOp11& t) {
  const int n = t.dim();
  GeneralExtensor out = GeneralExtensor::identity(n);
  const auto size = static_cast<BladeMask>(blade_count(n));
  // Column for e_A is the column for A without its highest factor, wedged with that image.
  std::vector<Multivector> cols;
  cols.reserve(size);
  cols.push_back(Multivector::scalar(n, 1.0));
  for (BladeMask a = 1; a < size; ++a) {
    const int top = std::bit_width(a) - 1;
    const BladeMask rest = a & ~(BladeMask{1} << top);
    cols.push_back(detail::wedge_vector_right(cols[rest], t.image(top)));
  }
  Matrix m(static_cast<int>(size), static_cast<int>(size));
  for (BladeMask j = 0; j < size; ++j)
    for (BladeMask k = 0; k < size; ++k) m(static_cast<int>(k), static_cast<int>(j)) = cols[j][k];
  return GeneralExtensor(n, std::move(m));
}

Multivector apply_extended(const LinOp11& t, const Multivector& x) {
  if (x.dim() != t.dim()) throw ArgumentError("operator/multivector dimension mismatch");
  const int n = t.dim();
  std::vector<Vector> images(n);
  for (int j = 0; j < n; ++j) images[j] = t.image(j);
  Multivector out(n);
  for (BladeMask a = 0; a < x.size(); ++a) {
    if (x[a] == 0.0) continue;
    Multivector acc = Multivector::scalar(n, x[a]);
    for (BladeMask rest = a; rest != 0; rest &= rest - 1) {
      acc = detail::wedge_vector_right(acc, images[std::countr_zero(rest)]);
    }
    out += acc;
  }
  return out;
}

LinOp11 adjoint(const LinOp11& t) { return LinOp11(t.matrix().transpose()); }

GeneralExtensor adjoint_general(const GeneralExtensor& t) {
  return GeneralExtensor(t.dim(), t.matrix().transpose());
}

LinOp11 symmetric_part(const LinOp11& t) { return 0.5 * (t + adjoint(t)); }

LinOp11 skew_part(const LinOp11& t) { return 0.5 * (t - adjoint(t)); }

Multivector apply_generalized(const LinOp11& t, const Multivector& x) {
  if (x.dim() != t.dim()) throw ArgumentError("operator/multivector dimension mismatch");
  const int n = t.dim();
  Multivector out(n);
  for (int k = 0; k < n; ++k) {
    Vector ek(n, 0.0);
    ek[k] = 1.0;
    const Multivector inner = detail::contract_vector_left(ek, x);
    if (inner.is_zero()) continue;
    out += detail::wedge_vector_left(t.image(k), inner);
  }
  return out;
}

GeneralExtensor generalize(const LinOp11& t) {
  return GeneralExtensor::from_action(t.dim(), [&](const Multivector& b) { return apply_generalized(t, b); });
}

Multivector bivector_of(const LinOp11& t) {
  const int n = t.dim();
  Multivector out(n);
  for (int k = 0; k < n; ++k) {
    out += wedge(Multivector::vector(n, t.image(k)), Multivector::basis_vector(n, k + 1));
  }
  return out;
}

double determinant(const LinOp11& t) {
  const int n = t.dim();
  const Multivector image = apply_extended(t, Multivector::unit_pseudoscalar(n));
  // e^1 ^ ... ^ e^n equals the unit pseudoscalar in the orthonormal fiducial basis.
  return scalar_product(image, Multivector::unit_pseudoscalar(n));
}

LinOp11 inverse(const LinOp11& t) {
  const int n = t.dim();
  const double det = determinant(t);
  const double scale = std::max(1.0, t.matrix().max_abs());
  if (std::abs(det) <= 1e-12 * std::pow(scale, n)) {
    throw SingularityError("operator is singular (det = " + std::to_string(det) + ")", det);
  }
  const Multivector pseudo = Multivector::unit_pseudoscalar(n);
  const Multivector pseudo_inv = reverse(pseudo);
  const LinOp11 adj = adjoint(t);
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const Multivector v = Multivector::basis_vector(n, j + 1);
    const Multivector col = clifford_product(apply_extended(adj, clifford_product(v, pseudo)), pseudo_inv);
    for (int k = 0; k < n; ++k) m(k, j) = col[BladeMask{1} << k] / det;
  }
  return LinOp11(std::move(m));
}

Multivector projector(const Multivector& x, const GradeSet& s) {
  Multivector out(x.dim());
  for (BladeMask m = 0; m < x.size(); ++m) {
    if (s.contains(grade_of(m))) out[m] = x[m];
  }
  return out;
}

ComponentTable::ComponentTable(int n, Matrix values) : dim_(n), values_(std::move(values)) {
  const int size = static_cast<int>(blade_count(n));
  if (values_.rows() != size || values_.cols() != size) throw ArgumentError("component table must be 2^n x 2^n");
}

ComponentTable components(const GeneralExtensor& t) {
  return ComponentTable(t.dim(), t.matrix().transpose());
}

GeneralExtensor reconstruct(const ComponentTable& c) {
  return GeneralExtensor(c.dim(), c.values().transpose());
}

LinOp11 metric_adjoint(const LinOp11& t, const MetricExtensor& g) {
  if (t.dim() != g.dim()) throw ArgumentError("operator/metric dimension mismatch");
  return g.inverse_op() * adjoint(t) * g.op();
}

bool is_metric_orthogonal(const LinOp11& lambda, const MetricExtensor& eta) {
  if (lambda.dim() != eta.dim()) throw ArgumentError("operator/metric dimension mismatch");
  const Matrix residual = lambda.matrix().transpose() * eta.op().matrix() * lambda.matrix() - eta.op().matrix();
  return residual.max_abs() < 1e-9;
}

} // namespace gakit
