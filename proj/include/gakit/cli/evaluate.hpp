#pragma once

#include <optional>
#include <string>

#include "gakit/cli/expression.hpp"
#include "gakit/metric.hpp"
#include "gakit/multivector.hpp"

namespace gakit::cli {

inline constexpr int kDefaultPrecision = 12;
inline constexpr double kDisplayCutoff = 1e-13;

struct SessionConfig {
  /// Throws ArgumentError unless 1 <= n <= kMaxDim and metric (when given) has dimension n.
  SessionConfig(int n, std::optional<MetricTensor> metric = std::nullopt);

  int n;
  MetricExtensor metric;
  /// Replaces every per-identity tolerance of the check harness when set.
  std::optional<double> tolerance;
  int precision = kDefaultPrecision;
};

/// A real (numeric literal arithmetic, scalar products) or a multivector.
struct Value {
  bool is_real = false;
  Multivector mv;

  double real() const { return mv.scalar_part(); }
};

/// Euclidean routines under the identity metric, the g-variants otherwise. Scaling needs one
/// operand with no non-scalar components. Throws ArgumentError for indices above cfg.n.
Value eval(const Expr& ast, const SessionConfig& cfg);

/// Coefficients to `precision` significant digits, dropping |c| < kDisplayCutoff, written in
/// expression syntax ("1.5 + 2*e1^e2 - e3"); "0" when nothing remains.
std::string format_multivector(const Multivector& x, int precision = kDefaultPrecision);
std::string format_value(const Value& v, int precision = kDefaultPrecision);

} // namespace gakit::cli
