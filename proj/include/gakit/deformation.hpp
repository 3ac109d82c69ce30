#pragma once

#include <span>
#include <vector>

#include "gakit/extensor.hpp"
#include "gakit/metric.hpp"
#include "gakit/multivector.hpp"

namespace gakit {

/// Eigenvalues sorted descending with orthonormal eigenvectors; each eigenvector is signed so
/// that its largest-magnitude coordinate is positive.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Vector> eigenvectors;
};

EigenDecomposition jacobi_eigendecompose(const MetricExtensor& g);
EigenDecomposition jacobi_eigendecompose(const LinOp11& symmetric);

/// Reflection-like metric v -> b v b (Euclidean sandwich): +1 on b, -1 on its complement.
/// Throws ArgumentError unless |b . b - 1| <= 1e-10.
MetricExtensor eta_from_vector(std::span<const double> b);

/// Metric with eigenvalue +1 on frame[0..p) and -1 on frame[p..n).
/// Throws ArgumentError if the frame is not orthonormal within 1e-10 or p is out of range.
MetricExtensor eta_signature(int p, const std::vector<Vector>& frame);

/// Diagonal metric diag(+1 x p, -1 x q) on the fiducial frame.
MetricExtensor standard_eta(Signature s);

/// Same action as eta_signature(p, frame) on v, computed instead as the sandwich
/// (-1)^{p+1} (u_1 ... u_p) v (u_p ... u_1) in the Euclidean Clifford algebra.
Vector eta_sandwich_apply(int p, const std::vector<Vector>& frame, std::span<const double> v);

/// Nonsingular h with g = h^T o eta o h.
struct GaugeExtensor {
  LinOp11 h;
  MetricExtensor eta;
  MetricExtensor g;
};

/// h = sum_j sigma_j sqrt|lambda_j| u_j v_j^T with sigma_j = +1, where v_j are g's eigenvectors
/// and u_j eta's, both ordered by descending eigenvalue so positive eigenvalues pair with
/// positive ones. Throws SignatureError when the signatures differ.
GaugeExtensor gauge_extensor(const MetricExtensor& g, const MetricExtensor& eta);

/// Max entry of |h^T eta h - g|.
double congruence_residual(const GaugeExtensor& gauge);

enum class Product { wedge, scalar, contract_left, contract_right, clifford };

/// Direct evaluation of X *_g Y with the metric_structures routines. Scalar results are
/// returned as grade-0 multivectors.
Multivector metric_product(const Multivector& x, const Multivector& y, const MetricExtensor& g, Product op);

/// X *_g Y transported through the gauge: extend(H)^{-1}(extend(H)(X) *_D extend(H)(Y)), where
/// H = Theta^T o h rotates eta onto its diagonal form D = diag(+-1) and *_D is the
/// signed-blade product of that diagonal metric.
Multivector golden_product(const Multivector& x, const Multivector& y, const GaugeExtensor& gauge, Product op);

/// A basis and its Euclidean reciprocal: primary[k] . reciprocal[l] = delta_kl.
struct BasisPair {
  std::vector<Vector> primary;
  std::vector<Vector> reciprocal;
};

/// Euclidean reciprocal of an arbitrary basis. Throws SingularityError if it is not a basis.
std::vector<Vector> euclidean_reciprocal(const std::vector<Vector>& basis);

/// (lambda(e_k), lambda*(e^k)) with lambda* = (lambda^{-1})^T. Defaults to the fiducial basis.
BasisPair deformed_bases(const LinOp11& lambda);
BasisPair deformed_bases(const LinOp11& lambda, const std::vector<Vector>& basis);

/// (h(e_k), h*(e^k)): their eta-products give g_jk and g^jk.
BasisPair gauge_bases(const GaugeExtensor& gauge);

/// (h^{-1}(u_k), h^T(u_k)) for eta's orthonormal eigenframe u_k (positive eigenvalues first):
/// their g- and g^{-1}-products give eta_jk.
BasisPair tetrad_bases(const GaugeExtensor& gauge);

/// eta's eigenframe, +1 eigenvectors first.
std::vector<Vector> eta_frame(const MetricExtensor& eta);

} // namespace gakit
