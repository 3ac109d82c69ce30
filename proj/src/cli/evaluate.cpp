#include "gakit/cli/evaluate.hpp"

#include <cmath>
#include <cstdio>

#include "gakit/euclidean.hpp"
#include "gakit/hodge.hpp"

namespace gakit::cli {

namespace {

MetricExtensor make_metric(int n, const std::optional<MetricTensor>& metric) {
  if (n < 1 || n > kMaxDim) {
    throw ArgumentError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
  }
  if (!metric) return MetricExtensor(MetricTensor::identity(n));
  if (metric->dim() != n) {
    throw ArgumentError("metric has dimension " + std::to_string(metric->dim()) + " but the session uses n = " +
                        std::to_string(n));
  }
  return MetricExtensor(*metric);
}

bool scalar_only(const Multivector& x) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[static_cast<BladeMask>(i)] != 0.0) return false;
  }
  return true;
}

Value real(int n, double v) { return {true, Multivector::scalar(n, v)}; }
Value multi(Multivector m) { return {false, std::move(m)}; }

Value eval_unary(const Unary& u, const SessionConfig& cfg) {
  Value x = eval(*u.operand, cfg);
  switch (u.op) {
    case UnaryOp::negate:
      x.mv *= -1.0;
      return x;
    case UnaryOp::reverse: return multi(reverse(x.mv));
    case UnaryOp::grade_involution: return multi(grade_involution(x.mv));
    case UnaryOp::hodge:
      return multi(cfg.metric.is_identity() ? hodge_star(x.mv) : metric_hodge(x.mv, cfg.metric));
  }
  throw ArgumentError("unknown unary operator");
}

Value eval_binary(const Binary& b, const SessionConfig& cfg) {
  const Value l = eval(*b.lhs, cfg);
  const Value r = eval(*b.rhs, cfg);
  const bool euclid = cfg.metric.is_identity();
  switch (b.op) {
    case BinaryOp::add: return {l.is_real && r.is_real, l.mv + r.mv};
    case BinaryOp::subtract: return {l.is_real && r.is_real, l.mv - r.mv};
    case BinaryOp::scalar_product:
      return real(cfg.n, euclid ? scalar_product(l.mv, r.mv) : scalar_product_g(l.mv, r.mv, cfg.metric));
    case BinaryOp::contract_left:
      return multi(euclid ? contract_left(l.mv, r.mv) : contract_left_g(l.mv, r.mv, cfg.metric));
    case BinaryOp::contract_right:
      return multi(euclid ? contract_right(l.mv, r.mv) : contract_right_g(l.mv, r.mv, cfg.metric));
    case BinaryOp::clifford:
      return multi(euclid ? clifford_product(l.mv, r.mv) : clifford_product_g(l.mv, r.mv, cfg.metric));
    case BinaryOp::wedge: return multi(wedge(l.mv, r.mv));
    case BinaryOp::scale:
      if (scalar_only(l.mv)) return {l.is_real && r.is_real, l.mv.scalar_part() * r.mv};
      if (scalar_only(r.mv)) return {l.is_real && r.is_real, r.mv.scalar_part() * l.mv};
      throw ArgumentError("'*' needs a scalar operand; use '%' for the Clifford product");
  }
  throw ArgumentError("unknown binary operator");
}

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

} // namespace

SessionConfig::SessionConfig(int n_, std::optional<MetricTensor> metric_) : n(n_), metric(make_metric(n_, metric_)) {}

Value eval(const Expr& ast, const SessionConfig& cfg) {
  if (const auto* num = std::get_if<Number>(&ast.node)) return real(cfg.n, num->value);
  if (const auto* b = std::get_if<BasisSymbol>(&ast.node)) {
    if (b->index < 1 || b->index > cfg.n) {
      throw ArgumentError("basis symbol e" + std::to_string(b->index) + " exceeds the session dimension n = " +
                          std::to_string(cfg.n));
    }
    return multi(Multivector::basis_vector(cfg.n, b->index));
  }
  if (const auto* u = std::get_if<Unary>(&ast.node)) return eval_unary(*u, cfg);
  return eval_binary(std::get<Binary>(ast.node), cfg);
}

std::string format_multivector(const Multivector& x, int precision) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto blade = static_cast<BladeMask>(i);
    const double c = x[blade];
    if (!(std::abs(c) >= kDisplayCutoff)) continue;
    const double mag = std::abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string name;
    for (const int idx : indices_of(blade)) {
      if (!name.empty()) name += '^';
      name += 'e' + std::to_string(idx);
    }
    const std::string coeff = format_number(mag, precision);
    if (name.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += name;
    } else {
      out += coeff + '*' + name;
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_value(const Value& v, int precision) {
  if (v.is_real) {
    const double r = v.real();
    return std::abs(r) < kDisplayCutoff ? "0" : format_number(r, precision);
  }
  return format_multivector(v.mv, precision);
}

} // namespace gakit::cli
