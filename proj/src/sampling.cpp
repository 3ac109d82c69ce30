#include "gakit/sampling.hpp"

#include <cmath>

#include "gakit/extensor.hpp"

namespace gakit {

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

int Sampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Vector Sampler::vector(int n) {
  Vector v(n);
  for (double& x : v) x = uniform(-1.0, 1.0);
  return v;
}

Multivector Sampler::multivector(int n) {
  Multivector x(n);
  for (BladeMask m = 0; m < x.size(); ++m) x[m] = uniform(-1.0, 1.0);
  return x;
}

Multivector Sampler::homogeneous(int n, int k) {
  Multivector x(n);
  for (BladeMask m = 0; m < x.size(); ++m) {
    if (grade_of(m) == k) x[m] = uniform(-1.0, 1.0);
  }
  return x;
}

Multivector Sampler::integer_homogeneous(int n, int k) {
  Multivector x(n);
  for (BladeMask m = 0; m < x.size(); ++m) {
    if (grade_of(m) == k) x[m] = integer(-3, 3);
  }
  return x;
}

LinOp11 Sampler::linop(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = uniform(-1.0, 1.0);
  return LinOp11(std::move(m));
}

LinOp11 Sampler::nonsingular_linop(int n, double min_abs_det) {
  for (;;) {
    LinOp11 t = linop(n);
    if (std::abs(lu_determinant(t.matrix())) >= min_abs_det) return t;
  }
}

Matrix Sampler::orthogonal(int n) {
  for (;;) {
    std::vector<Vector> basis;
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      Vector v = vector(n);
      for (const Vector& b : basis) {
        const double c = dot(v, b);
        for (int i = 0; i < n; ++i) v[i] -= c * b[i];
      }
      const double norm = std::sqrt(dot(v, v));
      if (norm < 1e-3) {
        ok = false;
        break;
      }
      for (double& x : v) x /= norm;
      basis.push_back(std::move(v));
    }
    if (!ok) continue;
    Matrix q(n, n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) q(i, k) = basis[k][i];
    return q;
  }
}

MetricExtensor Sampler::metric(Signature s) {
  const int n = s.p + s.q;
  const Matrix q = orthogonal(n);
  std::vector<double> lambda(n);
  for (int k = 0; k < n; ++k) lambda[k] = (k < s.p ? 1.0 : -1.0) * uniform(0.5, 2.0);
  const Matrix g = q * Matrix::diagonal(lambda) * q.transpose();
  return MetricExtensor(MetricTensor(0.5 * (g + g.transpose())));
}

MetricExtensor Sampler::metric(int n) {
  const int p = integer(0, n);
  return metric(Signature{p, n - p});
}

MetricExtensor Sampler::raw_symmetric_metric(int n) {
  for (;;) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        m(i, j) = uniform(-1.0, 1.0);
        m(j, i) = m(i, j);
      }
    }
    const SymmetricEigen e = jacobi_symmetric(m);
    bool ok = true;
    for (double lambda : e.values) ok = ok && std::abs(lambda) >= 1e-2;
    if (ok) return MetricExtensor(MetricTensor(m));
  }
}

} // namespace gakit
