#include "gakit/cli/deform.hpp"

#include "gakit/error.hpp"

namespace gakit::cli {

json_io::json DeformReport::to_json() const {
  const Signature s = gauge.eta.signature();
  return {{"h", json_io::linop_to_json(gauge.h)["matrix"]},
          {"eta", json_io::metric_to_json(gauge.eta)["matrix"]},
          {"signature", {s.p, s.q}},
          {"det_h", det_h},
          {"residual", residual}};
}

DeformReport deform(const MetricTensor& g, const std::optional<MetricTensor>& eta) {
  const MetricExtensor gx(g);
  const MetricExtensor etax = eta ? MetricExtensor(*eta) : standard_eta(gx.signature());
  if (etax.dim() != gx.dim()) throw ArgumentError("eta and the metric have different dimensions");
  DeformReport r{gauge_extensor(gx, etax), 0.0, 0.0};
  r.det_h = determinant(r.gauge.h);
  r.residual = congruence_residual(r.gauge);
  return r;
}

} // namespace gakit::cli
