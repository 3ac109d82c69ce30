#pragma once

#include <vector>

#include "gakit/deformation.hpp"
#include "gakit/metric.hpp"
#include "gakit/multivector.hpp"

namespace gakit {

/// A volume pseudoscalar and the number of negative eigenvalues of its metric (0 for the
/// Euclidean one): tau . tau = 1, or tau_g ._{g^{-1}} tau_g = (-1)^q.
struct VolumeElement {
  Multivector tau;
  int negative_count = 0;
};

/// tau = e_1 ^ ... ^ e_n.
VolumeElement standard_volume(int n);

/// sqrt(e_wedge . e_wedge) e^1 ^ ... ^ e^n for an arbitrary basis and its Euclidean reciprocal.
VolumeElement standard_volume(const std::vector<Vector>& basis);

/// reverse(X) _| tau; maps grade p to grade n - p.
Multivector hodge_star(const Multivector& x);
/// tau |_ reverse(X).
Multivector hodge_star_inverse(const Multivector& x);

/// sqrt|det g| tau.
VolumeElement metric_volume(const MetricExtensor& g);

/// reverse(X) _|_{g^{-1}} tau_g.
Multivector metric_hodge(const Multivector& x, const MetricExtensor& g);
/// (-1)^q tau_g |_{g^{-1}} reverse(X).
Multivector metric_hodge_inverse(const Multivector& x, const MetricExtensor& g);

/// ((-1)^q / sqrt|det g|) extend(g)(star X).
Multivector metric_hodge_via_g(const Multivector& x, const MetricExtensor& g);

/// sgn(det h) extend(h^T)(star_eta(extend(h*)(X))), h* = (h^{-1})^T.
Multivector metric_hodge_via_gauge(const Multivector& x, const GaugeExtensor& gauge);

} // namespace gakit
