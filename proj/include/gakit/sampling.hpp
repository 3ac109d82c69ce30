#pragma once

#include <cstdint>
#include <random>

#include "gakit/extensor.hpp"
#include "gakit/metric.hpp"
#include "gakit/multivector.hpp"

namespace gakit {

/// Seeded generator of random algebra inputs. Draws use the raw 64-bit engine output, so the
/// stream is identical across standard libraries for a given seed.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  int integer(int lo, int hi); // inclusive
  bool coin() { return (engine_() >> 63) != 0; }

  Vector vector(int n);
  Multivector multivector(int n);
  Multivector homogeneous(int n, int k);
  /// Coefficients are small integers in [-3, 3].
  Multivector integer_homogeneous(int n, int k);

  LinOp11 linop(int n);
  /// Rejection-sampled so that |det| >= min_abs_det.
  LinOp11 nonsingular_linop(int n, double min_abs_det = 0.1);
  /// Gram-Schmidt of a random matrix; determinant +-1.
  Matrix orthogonal(int n);
  /// Q diag(lambda) Q^T with |lambda| in [0.5, 2] and the requested signature.
  MetricExtensor metric(Signature s);
  /// Random signature, then metric(s).
  MetricExtensor metric(int n);
  /// Symmetric matrix with entries in [-1, 1], resampled until every |eigenvalue| >= 1e-2.
  MetricExtensor raw_symmetric_metric(int n);

private:
  std::mt19937_64 engine_;
};

} // namespace gakit
