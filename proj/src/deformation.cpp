#include "gakit/deformation.hpp"

#include <cmath>
#include <string>

#include "gakit/error.hpp"
#include "gakit/euclidean.hpp"

namespace gakit {

namespace {

EigenDecomposition from_symmetric_eigen(const SymmetricEigen& e) { return {e.values, e.vectors}; }

void require_orthonormal(const std::vector<Vector>& frame, int n) {
  if (static_cast<int>(frame.size()) != n) throw ArgumentError("frame must contain n vectors");
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(frame[j].size()) != n) throw ArgumentError("frame vector has wrong length");
    for (int k = 0; k < n; ++k) {
      const double expected = j == k ? 1.0 : 0.0;
      if (std::abs(dot(frame[j], frame[k]) - expected) > 1e-10) throw ArgumentError("frame is not orthonormal");
    }
  }
}

// Products for the diagonal metric diag(signs) on the fiducial blades.
int blade_metric_sign(BladeMask m, std::span<const int> signs) {
  int s = 1;
  for (BladeMask bits = m; bits != 0; bits &= bits - 1) s *= signs[std::countr_zero(bits)];
  return s;
}

Multivector diagonal_product(const Multivector& x, const Multivector& y, std::span<const int> signs, Product op) {
  const int n = x.dim();
  Multivector out(n);
  for (BladeMask a = 0; a < x.size(); ++a) {
    if (x[a] == 0.0) continue;
    for (BladeMask b = 0; b < y.size(); ++b) {
      if (y[b] == 0.0) continue;
      const double c = x[a] * y[b];
      switch (op) {
        case Product::wedge:
          if (!(a & b)) out[a | b] += canonical_reorder_sign(a, b) * c;
          break;
        case Product::scalar:
          if (a == b) out[0] += blade_metric_sign(a, signs) * c;
          break;
        case Product::contract_left:
          if ((a & b) == a) out[b & ~a] += canonical_reorder_sign(a, b) * blade_metric_sign(a, signs) * c;
          break;
        case Product::contract_right:
          if ((a & b) == b) out[a & ~b] += canonical_reorder_sign(a, b) * blade_metric_sign(b, signs) * c;
          break;
        case Product::clifford:
          out[a ^ b] += canonical_reorder_sign(a, b) * blade_metric_sign(a & b, signs) * c;
          break;
      }
    }
  }
  return out;
}

} // namespace

EigenDecomposition jacobi_eigendecompose(const MetricExtensor& g) { return from_symmetric_eigen(g.eigen()); }

EigenDecomposition jacobi_eigendecompose(const LinOp11& symmetric) {
  const Matrix& m = symmetric.matrix();
  if (max_abs_diff(m, m.transpose()) > kSymmetryTolerance) throw ArgumentError("operator is not symmetric");
  return from_symmetric_eigen(jacobi_symmetric(m));
}

MetricExtensor eta_from_vector(std::span<const double> b) {
  if (std::abs(dot(b, b) - 1.0) > 1e-10) throw ArgumentError("eta_from_vector needs a unit vector");
  const int n = static_cast<int>(b.size());
  // b v b = 2 (b . v) b - v
  return MetricExtensor(MetricTensor(2.0 * outer(b, b) - Matrix::identity(n)));
}

MetricExtensor eta_signature(int p, const std::vector<Vector>& frame) {
  const int n = static_cast<int>(frame.size());
  if (n < 1 || p < 0 || p > n) throw ArgumentError("eta_signature needs 0 <= p <= n");
  require_orthonormal(frame, n);
  Matrix m(n, n);
  for (int k = 0; k < n; ++k) m += (k < p ? 1.0 : -1.0) * outer(frame[k], frame[k]);
  return MetricExtensor(MetricTensor(0.5 * (m + m.transpose())));
}

MetricExtensor standard_eta(Signature s) {
  std::vector<double> d(s.p, 1.0);
  d.resize(s.p + s.q, -1.0);
  return MetricExtensor(MetricTensor::diagonal(d));
}

Vector eta_sandwich_apply(int p, const std::vector<Vector>& frame, std::span<const double> v) {
  const int n = static_cast<int>(frame.size());
  if (n < 1 || p < 0 || p > n) throw ArgumentError("eta_sandwich_apply needs 0 <= p <= n");
  require_orthonormal(frame, n);
  Multivector left = Multivector::scalar(n, 1.0);
  for (int k = 0; k < p; ++k) left = clifford_product(left, Multivector::vector(n, frame[k]));
  const Multivector right = reverse(left);
  Multivector result = clifford_product(clifford_product(left, Multivector::vector(n, v)), right);
  if (p % 2 == 0) result *= -1.0;
  return result.vector_part();
}

GaugeExtensor gauge_extensor(const MetricExtensor& g, const MetricExtensor& eta) {
  if (g.dim() != eta.dim()) throw ArgumentError("metric dimension mismatch");
  if (g.signature() != eta.signature()) {
    throw SignatureError("signature mismatch: g has (" + std::to_string(g.signature().p) + "," +
                         std::to_string(g.signature().q) + "), eta has (" + std::to_string(eta.signature().p) +
                         "," + std::to_string(eta.signature().q) + ")");
  }
  const int n = g.dim();
  const SymmetricEigen& ge = g.eigen();
  const SymmetricEigen& ee = eta.eigen();
  Matrix h(n, n);
  for (int j = 0; j < n; ++j) {
    // sigma_j = +1
    h += std::sqrt(std::abs(ge.values[j])) * outer(ee.vectors[j], ge.vectors[j]);
  }
  return GaugeExtensor{LinOp11(std::move(h)), eta, g};
}

double congruence_residual(const GaugeExtensor& gauge) {
  const Matrix& h = gauge.h.matrix();
  return max_abs_diff(h.transpose() * gauge.eta.op().matrix() * h, gauge.g.op().matrix());
}

Multivector metric_product(const Multivector& x, const Multivector& y, const MetricExtensor& g, Product op) {
  switch (op) {
    case Product::wedge: return wedge(x, y);
    case Product::scalar: return Multivector::scalar(x.dim(), scalar_product_g(x, y, g));
    case Product::contract_left: return contract_left_g(x, y, g);
    case Product::contract_right: return contract_right_g(x, y, g);
    case Product::clifford: return clifford_product_g(x, y, g);
  }
  throw ArgumentError("unknown product");
}

std::vector<Vector> eta_frame(const MetricExtensor& eta) { return eta.eigen().vectors; }

Multivector golden_product(const Multivector& x, const Multivector& y, const GaugeExtensor& gauge, Product op) {
  require_same_dim(x, y);
  const int n = gauge.h.dim();
  if (x.dim() != n) throw ArgumentError("multivector/gauge dimension mismatch");
  const SymmetricEigen& ee = gauge.eta.eigen();
  Matrix theta_t(n, n);
  std::vector<int> signs(n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) theta_t(k, j) = ee.vectors[k][j];
    signs[k] = ee.values[k] > 0.0 ? 1 : -1;
  }
  const LinOp11 transport = LinOp11(theta_t) * gauge.h;
  const Multivector product =
      diagonal_product(apply_extended(transport, x), apply_extended(transport, y), signs, op);
  return apply_extended(inverse(transport), product);
}

std::vector<Vector> euclidean_reciprocal(const std::vector<Vector>& basis) {
  const int n = static_cast<int>(basis.size());
  if (n < 1) throw ArgumentError("empty basis");
  Matrix e(n, n);
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(basis[k].size()) != n) throw ArgumentError("basis vector has wrong length");
    for (int i = 0; i < n; ++i) e(i, k) = basis[k][i];
  }
  if (std::abs(lu_determinant(e)) <= 1e-14) throw SingularityError("vectors do not form a basis", lu_determinant(e));
  // Columns r^l with e_k . r^l = delta: R = (E^T)^{-1}
  const Matrix r = gauss_jordan_inverse(e.transpose());
  std::vector<Vector> out;
  for (int l = 0; l < n; ++l) out.push_back(r.column(l));
  return out;
}

BasisPair deformed_bases(const LinOp11& lambda, const std::vector<Vector>& basis) {
  const LinOp11 star = adjoint(inverse(lambda));
  const std::vector<Vector> recip = euclidean_reciprocal(basis);
  BasisPair out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out.primary.push_back(lambda.apply(basis[k]));
    out.reciprocal.push_back(star.apply(recip[k]));
  }
  return out;
}

BasisPair deformed_bases(const LinOp11& lambda) {
  const int n = lambda.dim();
  std::vector<Vector> fiducial;
  for (int k = 0; k < n; ++k) fiducial.push_back(Matrix::identity(n).column(k));
  return deformed_bases(lambda, fiducial);
}

BasisPair gauge_bases(const GaugeExtensor& gauge) { return deformed_bases(gauge.h); }

BasisPair tetrad_bases(const GaugeExtensor& gauge) {
  const LinOp11 h_inv = inverse(gauge.h);
  const LinOp11 h_adj = adjoint(gauge.h);
  BasisPair out;
  for (const Vector& u : eta_frame(gauge.eta)) {
    out.primary.push_back(h_inv.apply(u));
    out.reciprocal.push_back(h_adj.apply(u));
  }
  return out;
}

} // namespace gakit
