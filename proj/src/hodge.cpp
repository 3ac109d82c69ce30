#include "gakit/hodge.hpp"

#include <cmath>

#include "gakit/error.hpp"
#include "gakit/euclidean.hpp"

namespace gakit {

namespace {

void require_dim(const Multivector& x, int n) {
  if (x.dim() != n) throw ArgumentError("multivector/metric dimension mismatch");
}

double parity(int q) { return (q % 2 == 0) ? 1.0 : -1.0; }

} // namespace

VolumeElement standard_volume(int n) { return {Multivector::unit_pseudoscalar(n), 0}; }

VolumeElement standard_volume(const std::vector<Vector>& basis) {
  const int n = static_cast<int>(basis.size());
  const std::vector<Vector> recip = euclidean_reciprocal(basis);
  Multivector lower = Multivector::scalar(n, 1.0);
  Multivector upper = Multivector::scalar(n, 1.0);
  for (int k = 0; k < n; ++k) {
    lower = wedge(lower, Multivector::vector(n, basis[k]));
    upper = wedge(upper, Multivector::vector(n, recip[k]));
  }
  return {upper * std::sqrt(scalar_product(lower, lower)), 0};
}

Multivector hodge_star(const Multivector& x) {
  return contract_left(reverse(x), Multivector::unit_pseudoscalar(x.dim()));
}

Multivector hodge_star_inverse(const Multivector& x) {
  return contract_right(Multivector::unit_pseudoscalar(x.dim()), reverse(x));
}

VolumeElement metric_volume(const MetricExtensor& g) {
  return {Multivector::unit_pseudoscalar(g.dim()) * std::sqrt(std::abs(g.det())), g.signature().q};
}

Multivector metric_hodge(const Multivector& x, const MetricExtensor& g) {
  require_dim(x, g.dim());
  // _|_{g^{-1}} is the Euclidean contraction after extend(g^{-1}) on the left operand.
  return contract_left(apply_extended(g.inverse_op(), reverse(x)), metric_volume(g).tau);
}

Multivector metric_hodge_inverse(const Multivector& x, const MetricExtensor& g) {
  require_dim(x, g.dim());
  const VolumeElement vol = metric_volume(g);
  return contract_right(vol.tau, apply_extended(g.inverse_op(), reverse(x))) * parity(vol.negative_count);
}

Multivector metric_hodge_via_g(const Multivector& x, const MetricExtensor& g) {
  require_dim(x, g.dim());
  const double factor = parity(g.signature().q) / std::sqrt(std::abs(g.det()));
  return apply_extended(g.op(), hodge_star(x)) * factor;
}

Multivector metric_hodge_via_gauge(const Multivector& x, const GaugeExtensor& gauge) {
  require_dim(x, gauge.h.dim());
  const LinOp11 h_star = adjoint(inverse(gauge.h));
  const double sign = determinant(gauge.h) < 0.0 ? -1.0 : 1.0;
  const Multivector dual = metric_hodge(apply_extended(h_star, x), gauge.eta);
  return apply_extended(adjoint(gauge.h), dual) * sign;
}

} // namespace gakit
