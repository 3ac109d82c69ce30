#include "gakit/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gakit/error.hpp"

namespace gakit::json_io {

namespace {

int read_dim(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw ArgumentError("JSON object needs an integer field \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxDim) throw ArgumentError("\"n\" must be in 1.." + std::to_string(kMaxDim));
  return n;
}

Matrix read_square(const json& j, int n) {
  if (!j.contains("matrix") || !j["matrix"].is_array()) throw ArgumentError("JSON object needs an array \"matrix\"");
  const json& rows = j["matrix"];
  if (static_cast<int>(rows.size()) != n) throw ArgumentError("\"matrix\" must have n rows");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n) {
      throw ArgumentError("\"matrix\" row " + std::to_string(r + 1) + " must have n entries");
    }
    for (int c = 0; c < n; ++c) {
      if (!rows[r][c].is_number()) throw ArgumentError("\"matrix\" entries must be numbers");
      m(r, c) = rows[r][c].get<double>();
    }
  }
  return m;
}

} // namespace

json multivector_to_json(const Multivector& x) {
  json terms = json::array();
  for (BladeMask m = 0; m < x.size(); ++m) {
    if (x[m] == 0.0) continue;
    terms.push_back({{"blade", indices_of(m)}, {"coeff", x[m]}});
  }
  return {{"n", x.dim()}, {"terms", terms}};
}

Multivector multivector_from_json(const json& j) {
  const int n = read_dim(j);
  if (!j.contains("terms") || !j["terms"].is_array()) throw ArgumentError("multivector needs an array \"terms\"");
  Multivector x(n);
  std::set<BladeMask> seen;
  for (const json& term : j["terms"]) {
    if (!term.is_object() || !term.contains("blade") || !term["blade"].is_array() || !term.contains("coeff") ||
        !term["coeff"].is_number()) {
      throw ArgumentError("each term needs \"blade\" (array) and \"coeff\" (number)");
    }
    std::vector<int> indices;
    for (const json& idx : term["blade"]) {
      if (!idx.is_number_integer()) throw ArgumentError("blade indices must be integers");
      indices.push_back(idx.get<int>());
    }
    const BladeMask mask = blade_from_indices(indices, n);
    if (!seen.insert(mask).second) throw ArgumentError("duplicate blade in terms");
    x[mask] = term["coeff"].get<double>();
  }
  return x;
}

json metric_to_json(const MetricTensor& g) { return {{"n", g.dim()}, {"matrix", g.matrix().to_rows()}}; }

json metric_to_json(const MetricExtensor& g) {
  return {{"n", g.dim()}, {"matrix", g.op().matrix().to_rows()}};
}

MetricTensor metric_from_json(const json& j) {
  const int n = read_dim(j);
  return MetricTensor(read_square(j, n));
}

json linop_to_json(const LinOp11& t) {
  return {{"n", t.dim()}, {"matrix", t.matrix().transpose().to_rows()}};
}

LinOp11 linop_from_json(const json& j) {
  const int n = read_dim(j);
  return LinOp11(read_square(j, n).transpose());
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("invalid JSON: ") + e.what());
  }
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

} // namespace gakit::json_io
