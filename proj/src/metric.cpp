#include "gakit/metric.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "detail.hpp"
#include "gakit/error.hpp"
#include "gakit/euclidean.hpp"

namespace gakit {

namespace {

Matrix checked_symmetric(const Matrix& g) {
  if (!g.is_square() || g.rows() < 1 || g.rows() > kMaxDim) {
    throw ArgumentError("metric must be a square matrix of size 1.." + std::to_string(kMaxDim));
  }
  const int n = g.rows();
  Matrix sym(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double diff = std::abs(g(j, k) - g(k, j));
      if (diff > kSymmetryTolerance) {
        std::ostringstream os;
        os << "metric is not symmetric: |G(" << j + 1 << "," << k + 1 << ") - G(" << k + 1 << "," << j + 1
           << ")| = " << diff;
        throw ArgumentError(os.str());
      }
      sym(j, k) = 0.5 * (g(j, k) + g(k, j));
    }
  }
  return sym;
}

} // namespace

MetricTensor::MetricTensor(const Matrix& g) : g_(checked_symmetric(g)) {
  for (double lambda : jacobi_symmetric(g_).values) {
    if (std::abs(lambda) <= kDegeneracyTolerance) {
      std::ostringstream os;
      os << "metric is degenerate: eigenvalue " << lambda << " is within " << kDegeneracyTolerance << " of zero";
      throw DegeneracyError(os.str(), lambda);
    }
  }
  const double det = lu_determinant(g_);
  if (std::abs(det) <= kDegeneracyTolerance) {
    throw DegeneracyError("metric is degenerate: |det G| = " + std::to_string(std::abs(det)), det);
  }
}

MetricTensor MetricTensor::identity(int n) { return MetricTensor(Matrix::identity(n)); }

MetricTensor MetricTensor::diagonal(std::span<const double> d) { return MetricTensor(Matrix::diagonal(d)); }

MetricExtensor::MetricExtensor(const MetricTensor& g)
    : op_(g.matrix()), inverse_(gauss_jordan_inverse(g.matrix())), eigen_(jacobi_symmetric(g.matrix())) {
  for (double lambda : eigen_.values) {
    if (std::abs(lambda) <= kDegeneracyTolerance) {
      std::ostringstream os;
      os << "metric is degenerate: eigenvalue " << lambda << " is within " << kDegeneracyTolerance << " of zero";
      throw DegeneracyError(os.str(), lambda);
    }
    if (lambda > 0.0) {
      ++signature_.p;
    } else {
      ++signature_.q;
    }
  }
  det_ = lu_determinant(g.matrix());
  identity_ = g.matrix() == Matrix::identity(g.dim());
}

MetricExtensor MetricExtensor::from_operator(const LinOp11& op) { return MetricExtensor(MetricTensor(op.matrix())); }

MetricExtensor metric_extensor_from_G(const MetricTensor& g) { return MetricExtensor(g); }

MetricExtensor metric_inverse(const MetricExtensor& g) {
  // Symmetrize away round-off so the inverse passes the exact-symmetry check.
  const Matrix& inv = g.inverse_op().matrix();
  return MetricExtensor(MetricTensor(0.5 * (inv + inv.transpose())));
}

std::vector<Vector> reciprocal_basis(const MetricTensor& g) {
  const Matrix inv = gauss_jordan_inverse(g.matrix());
  std::vector<Vector> out;
  for (int k = 0; k < g.dim(); ++k) out.push_back(inv.column(k));
  return out;
}

double scalar_product_g(const Multivector& x, const Multivector& y, const MetricExtensor& g) {
  require_same_dim(x, y);
  return scalar_product(apply_extended(g.op(), x), y);
}

Multivector contract_left_g(const Multivector& x, const Multivector& y, const MetricExtensor& g) {
  require_same_dim(x, y);
  return contract_left(apply_extended(g.op(), x), y);
}

Multivector contract_right_g(const Multivector& x, const Multivector& y, const MetricExtensor& g) {
  require_same_dim(x, y);
  return contract_right(x, apply_extended(g.op(), y));
}

Multivector clifford_product_g(const Multivector& x, const Multivector& y, const MetricExtensor& g) {
  require_same_dim(x, y);
  if (x.dim() != g.dim()) throw ArgumentError("multivector/metric dimension mismatch");
  const int n = x.dim();
  std::vector<Vector> g_images(n);
  for (int i = 0; i < n; ++i) g_images[i] = g.op().image(i);

  std::vector<std::optional<Multivector>> memo(x.size());
  // memo[a] = e_A Y
  std::function<const Multivector&(BladeMask)> blade_times_y = [&](BladeMask a) -> const Multivector& {
    if (memo[a]) return *memo[a];
    if (a == 0) {
      memo[a] = y;
      return *memo[a];
    }
    const int i = std::countr_zero(a);
    const BladeMask rest = a & (a - 1);
    Vector ei(n, 0.0);
    ei[i] = 1.0;
    // e_i (e_rest Y) = g(e_i) _| Z + e_i ^ Z
    const Multivector& z = blade_times_y(rest);
    Multivector r = detail::contract_vector_left(g_images[i], z) + detail::wedge_vector_left(ei, z);
    // minus (e_i _|_g e_rest) Y
    for (BladeMask bits = rest; bits != 0; bits &= bits - 1) {
      const int j = std::countr_zero(bits);
      const double gij = g_images[i][j];
      if (gij == 0.0) continue;
      const BladeMask ej = BladeMask{1} << j;
      r -= blade_times_y(rest & ~ej) * (canonical_reorder_sign(ej, rest) * gij);
    }
    memo[a] = std::move(r);
    return *memo[a];
  };

  Multivector out(n);
  for (BladeMask a = 0; a < x.size(); ++a) {
    if (x[a] != 0.0) out += blade_times_y(a) * x[a];
  }
  return out;
}

Signature signature(const MetricExtensor& g) { return g.signature(); }

} // namespace gakit
