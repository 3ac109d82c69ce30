#pragma once

#include <optional>

#include "gakit/deformation.hpp"
#include "gakit/json_io.hpp"

namespace gakit::cli {

inline constexpr double kDeformTolerance = 1e-8;

struct DeformReport {
  GaugeExtensor gauge;
  double det_h = 0.0;
  double residual = 0.0;

  /// {"h", "eta", "signature": [p, q], "det_h", "residual"}; h uses the operator layout
  /// (rows are images), eta the metric layout.
  json_io::json to_json() const;
};

/// Gauge extensor of g over eta, which defaults to diag(+1 x p, -1 x q) for g's signature.
/// Propagates DegeneracyError / SignatureError from the metric and gauge construction.
DeformReport deform(const MetricTensor& g, const std::optional<MetricTensor>& eta = std::nullopt);

} // namespace gakit::cli
