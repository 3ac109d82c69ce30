#pragma once

#include <string>

#include "json.hpp"

#include "gakit/extensor.hpp"
#include "gakit/metric.hpp"
#include "gakit/multivector.hpp"

// JSON forms:
//   multivector {"n": 3, "terms": [{"blade": [1,2], "coeff": 1.5}, {"blade": [], "coeff": 2.0}]}
//   metric      {"n": 4, "matrix": [[1,0,0,0],[0,-1,0,0],[0,0,-1,0],[0,0,0,-1]]}
//   operator    {"n": 3, "matrix": [[...],[...],[...]]}   rows are the images t(e_j)
// Malformed documents raise ArgumentError.
namespace gakit::json_io {

using nlohmann::json;

json multivector_to_json(const Multivector& x);
/// Blade index lists must be strictly ascending and distinct across terms.
Multivector multivector_from_json(const json& j);

json metric_to_json(const MetricTensor& g);
json metric_to_json(const MetricExtensor& g);
/// Rejects asymmetry beyond 1e-12 and degenerate matrices.
MetricTensor metric_from_json(const json& j);

json linop_to_json(const LinOp11& t);
LinOp11 linop_from_json(const json& j);

json parse_document(const std::string& text);
json load_file(const std::string& path);

} // namespace gakit::json_io
