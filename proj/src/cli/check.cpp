#include "gakit/cli/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <numeric>

#include "gakit/deformation.hpp"
#include "gakit/euclidean.hpp"
#include "gakit/extensor.hpp"
#include "gakit/hodge.hpp"
#include "gakit/sampling.hpp"

namespace gakit::cli {

namespace {

struct Context {
  int n;
  const MetricExtensor& g;
  MetricExtensor g_inv;
  GaugeExtensor gauge;
  VolumeElement tau;
  VolumeElement tau_g;
  int q;
};

using Trial = std::function<double(Sampler&, const Context&)>;

struct Identity {
  const char* name;
  double tolerance;
  Trial trial;
};

double rel(const Multivector& a, const Multivector& b) {
  return max_abs_diff(a, b) / std::max({1.0, a.max_abs(), b.max_abs()});
}

double rel(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double rel(const LinOp11& a, const LinOp11& b) {
  return max_abs_diff(a, b) / std::max({1.0, a.matrix().max_abs(), b.matrix().max_abs()});
}

double sign_pow(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

Multivector wedge_all(const std::vector<Vector>& vs, int n) {
  Multivector out = Multivector::scalar(n, 1.0);
  for (const auto& v : vs) out = wedge(out, Multivector::vector(n, v));
  return out;
}

Multivector euclid_product(const Multivector& x, const Multivector& y, Product op) {
  switch (op) {
    case Product::wedge: return wedge(x, y);
    case Product::scalar: return Multivector::scalar(x.dim(), scalar_product(x, y));
    case Product::contract_left: return contract_left(x, y);
    case Product::contract_right: return contract_right(x, y);
    case Product::clifford: return clifford_product(x, y);
  }
  return x;
}

constexpr Product kProducts[] = {Product::wedge, Product::scalar, Product::contract_left, Product::contract_right,
                                 Product::clifford};

// Coefficient X^{i_1...i_k} of an antisymmetric array stored by its canonical blades.
double antisymmetric_entry(const Multivector& x, const std::vector<int>& idx) {
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 0.0;
  return generalized_kronecker(idx, sorted) * x[blade_from_indices(sorted, x.dim())];
}

double kronecker_trial(Sampler& s, const Context& c) {
  const int m = std::min(c.n, 4);
  const int k = s.integer(1, m);
  const Multivector x = s.integer_homogeneous(m, k);
  std::vector<int> j(static_cast<std::size_t>(k));
  for (auto& v : j) v = s.integer(1, m);
  double factorial = 1.0;
  for (int a = 2; a <= k; ++a) factorial *= a;
  double sum = 0.0;
  std::vector<int> i(static_cast<std::size_t>(k), 1);
  for (;;) {
    sum += generalized_kronecker(j, i) * antisymmetric_entry(x, i);
    std::size_t a = 0;
    while (a < i.size() && i[a] == m) i[a++] = 1;
    if (a == i.size()) break;
    ++i[a];
  }
  return std::abs(antisymmetric_entry(x, j) - sum / factorial);
}

std::vector<Identity> identities() {
  std::vector<Identity> list;
  auto add = [&](const char* name, double tol, Trial t) { list.push_back({name, tol, std::move(t)}); };

  add("kronecker.component_identity", 0.0, kronecker_trial);
  add("involution.composition", 0.0, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n);
    const Multivector conj = conjugate(x);
    return std::max({max_abs_diff(conj, grade_involution(reverse(x))), max_abs_diff(conj, reverse(grade_involution(x))),
                     max_abs_diff(x, reverse(reverse(x))), max_abs_diff(x, grade_involution(grade_involution(x))),
                     max_abs_diff(x, conjugate(conj))});
  });
  add("clifford.associativity", 1e-10, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n), z = s.multivector(c.n);
    return rel(clifford_product(clifford_product(x, y), z), clifford_product(x, clifford_product(y, z)));
  });
  add("clifford.vector_left", 1e-12, [](Sampler& s, const Context& c) {
    const Multivector v = Multivector::vector(c.n, s.vector(c.n)), x = s.multivector(c.n);
    return rel(clifford_product(v, x), contract_left(v, x) + wedge(v, x));
  });
  add("clifford.vector_right", 1e-12, [](Sampler& s, const Context& c) {
    const Multivector v = Multivector::vector(c.n, s.vector(c.n)), x = s.multivector(c.n);
    return rel(clifford_product(x, v), contract_right(x, v) + wedge(x, v));
  });
  add("clifford.grade_structure", 1e-12, [](Sampler& s, const Context& c) {
    const int r = s.integer(0, c.n), t = s.integer(0, c.n);
    const Multivector p = clifford_product(s.homogeneous(c.n, r), s.homogeneous(c.n, t));
    double worst = 0.0;
    for (int k = 0; k <= c.n; ++k) {
      const bool allowed = k >= std::abs(r - t) && k <= r + t && (k - std::abs(r - t)) % 2 == 0;
      if (!allowed) worst = std::max(worst, grade_project(p, k).max_abs());
    }
    return worst;
  });

  add("contraction.left_scalar_adjoint", 1e-10, [](Sampler& s, const Context& c) {
    const int q = s.integer(0, c.n), p = s.integer(0, q);
    const Multivector x = s.homogeneous(c.n, p), y = s.homogeneous(c.n, q), z = s.homogeneous(c.n, q - p);
    return rel(scalar_product(contract_left(x, y), z), scalar_product(y, wedge(reverse(x), z)));
  });
  add("contraction.right_scalar_adjoint", 1e-10, [](Sampler& s, const Context& c) {
    const int p = s.integer(0, c.n), q = s.integer(0, p);
    const Multivector x = s.homogeneous(c.n, p), y = s.homogeneous(c.n, q), z = s.homogeneous(c.n, p - q);
    return rel(scalar_product(contract_right(x, y), z), scalar_product(x, wedge(z, reverse(y))));
  });
  add("contraction.left_wedge_adjoint", 1e-10, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n), z = s.multivector(c.n);
    return rel(scalar_product(contract_left(x, y), z), scalar_product(y, wedge(reverse(x), z)));
  });
  add("contraction.right_wedge_adjoint", 1e-10, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n), z = s.multivector(c.n);
    return rel(scalar_product(contract_right(x, y), z), scalar_product(x, wedge(z, reverse(y))));
  });
  add("contraction.left_nested", 1e-10, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n), z = s.multivector(c.n);
    return rel(contract_left(x, contract_left(y, z)), contract_left(wedge(x, y), z));
  });
  add("contraction.right_nested", 1e-10, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n), z = s.multivector(c.n);
    return rel(contract_right(contract_right(x, y), z), contract_right(x, wedge(y, z)));
  });
  add("contraction.left_right_duality", 1e-10, [](Sampler& s, const Context& c) {
    const int q = s.integer(0, c.n), p = s.integer(0, q);
    const Multivector x = s.homogeneous(c.n, p), y = s.homogeneous(c.n, q);
    return rel(contract_left(x, y), sign_pow(p * (q - p)) * contract_right(y, x));
  });

  add("metric.operator_symmetry", 1e-12, [](Sampler& s, const Context& c) {
    const Vector v = s.vector(c.n), w = s.vector(c.n);
    const Vector gv = c.g.op().apply(v), gw = c.g.op().apply(w);
    return rel(dot(gv, w), dot(v, gw));
  });
  add("metric.gram_determinant", 1e-9, [](Sampler& s, const Context& c) {
    const int k = s.integer(1, c.n);
    std::vector<Vector> vs, ws;
    for (int a = 0; a < k; ++a) vs.push_back(s.vector(c.n));
    for (int a = 0; a < k; ++a) ws.push_back(s.vector(c.n));
    Matrix gram(k, k);
    for (int a = 0; a < k; ++a) {
      const Vector gv = c.g.op().apply(vs[static_cast<std::size_t>(a)]);
      for (int b = 0; b < k; ++b) gram(a, b) = dot(gv, ws[static_cast<std::size_t>(b)]);
    }
    return rel(scalar_product_g(wedge_all(vs, c.n), wedge_all(ws, c.n), c.g), lu_determinant(gram));
  });
  add("metric.reciprocal_products", 1e-10, [](Sampler&, const Context& c) {
    const auto recip = reciprocal_basis(MetricTensor(c.g.op().matrix()));
    double worst = 0.0;
    for (int j = 0; j < c.n; ++j) {
      for (int k = 0; k < c.n; ++k) {
        const Vector gj = c.g.op().apply(recip[static_cast<std::size_t>(j)]);
        worst = std::max(worst, rel(dot(gj, recip[static_cast<std::size_t>(k)]), c.g.inverse_op().matrix()(j, k)));
      }
    }
    return worst;
  });
  add("metric.reciprocal_expansion", 1e-10, [](Sampler& s, const Context& c) {
    const auto recip = reciprocal_basis(MetricTensor(c.g.op().matrix()));
    const Vector v = s.vector(c.n);
    const Vector gv = c.g.op().apply(v);
    Vector a(static_cast<std::size_t>(c.n), 0.0), b(static_cast<std::size_t>(c.n), 0.0);
    for (int k = 0; k < c.n; ++k) {
      const auto& ek = recip[static_cast<std::size_t>(k)];
      a[static_cast<std::size_t>(k)] += dot(gv, ek);
      const double coeff = gv[static_cast<std::size_t>(k)];
      for (int i = 0; i < c.n; ++i) b[static_cast<std::size_t>(i)] += coeff * ek[static_cast<std::size_t>(i)];
    }
    const Multivector mv = Multivector::vector(c.n, v);
    return std::max(rel(Multivector::vector(c.n, a), mv), rel(Multivector::vector(c.n, b), mv));
  });
  add("metric.clifford_vector", 1e-9, [](Sampler& s, const Context& c) {
    const Multivector v = Multivector::vector(c.n, s.vector(c.n)), x = s.multivector(c.n);
    return rel(clifford_product_g(v, x, c.g), contract_left_g(v, x, c.g) + wedge(v, x));
  });
  add("metric.clifford_associativity", 1e-9, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n), z = s.multivector(c.n);
    return rel(clifford_product_g(clifford_product_g(x, y, c.g), z, c.g),
               clifford_product_g(x, clifford_product_g(y, z, c.g), c.g));
  });
  add("metric.adjoint", 1e-9, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.linop(c.n);
    const Multivector v = Multivector::vector(c.n, s.vector(c.n)), w = Multivector::vector(c.n, s.vector(c.n));
    return rel(scalar_product_g(v, metric_adjoint(t, c.g).apply(w), c.g), scalar_product_g(t.apply(v), w, c.g));
  });

  add("extension.composition", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 a = s.linop(c.n), b = s.linop(c.n);
    const Multivector x = s.multivector(c.n);
    return rel(apply_extended(a * b, x), apply_extended(a, apply_extended(b, x)));
  });
  add("extension.inverse", 1e-8, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.nonsingular_linop(c.n);
    const Multivector x = s.multivector(c.n);
    return rel(apply_extended(inverse(t), apply_extended(t, x)), x);
  });
  add("adjoint.composition", 1e-12, [](Sampler& s, const Context& c) {
    const LinOp11 u = s.linop(c.n), t = s.linop(c.n);
    return rel(adjoint(u * t), adjoint(t) * adjoint(u));
  });
  add("adjoint.inverse", 1e-8, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.nonsingular_linop(c.n);
    return rel(inverse(adjoint(t)), adjoint(inverse(t)));
  });
  add("adjoint.extension", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.linop(c.n);
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
    return rel(scalar_product(x, apply_extended(adjoint(t), y)), scalar_product(apply_extended(t, x), y));
  });
  add("generalization.leibniz", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.linop(c.n);
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
    return rel(apply_generalized(t, wedge(x, y)), wedge(apply_generalized(t, x), y) + wedge(x, apply_generalized(t, y)));
  });
  add("generalization.adjoint", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.linop(c.n);
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
    return rel(scalar_product(x, apply_generalized(adjoint(t), y)), scalar_product(apply_generalized(t, x), y));
  });
  add("generalization.skew_commutator", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.linop(c.n);
    const Multivector x = s.multivector(c.n);
    return rel(apply_generalized(skew_part(t), x), 0.5 * commutator(bivector_of(t), x));
  });
  add("generalization.skew_derivation", 1e-9, [](Sampler& s, const Context& c) {
    const LinOp11 t = skew_part(s.linop(c.n));
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
    const Multivector dx = apply_generalized(t, x), dy = apply_generalized(t, y);
    double worst = 0.0;
    for (const Product op : kProducts) {
      worst = std::max(worst, rel(apply_generalized(t, euclid_product(x, y, op)),
                                  euclid_product(dx, y, op) + euclid_product(x, dy, op)));
    }
    return worst;
  });
  add("generalization.skew_antisymmetry", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 t = skew_part(s.linop(c.n));
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
    return rel(scalar_product(apply_generalized(t, x), y), -scalar_product(x, apply_generalized(t, y)));
  });
  add("determinant.product", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 u = s.linop(c.n), t = s.linop(c.n);
    return rel(determinant(u * t), determinant(u) * determinant(t));
  });
  add("determinant.inverse", 1e-8, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.nonsingular_linop(c.n);
    return rel(determinant(inverse(t)), 1.0 / determinant(t));
  });
  add("determinant.adjoint", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.linop(c.n);
    return rel(determinant(adjoint(t)), determinant(t));
  });
  add("determinant.matrix", 1e-10, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.linop(c.n);
    return rel(determinant(t), lu_determinant(t.matrix()));
  });
  add("inverse.adjugate", 1e-9, [](Sampler& s, const Context& c) {
    const LinOp11 t = s.nonsingular_linop(c.n);
    return rel(inverse(t), LinOp11(gauss_jordan_inverse(t.matrix())));
  });
  add("projector.self_adjoint", 1e-12, [](Sampler& s, const Context& c) {
    GradeSet set;
    for (int k = 0; k <= c.n; ++k) {
      if (s.coin()) set.insert(k);
    }
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
    return rel(scalar_product(projector(x, set), y), scalar_product(x, projector(y, set)));
  });

  add("gauge.congruence", 1e-8, [](Sampler& s, const Context& c) {
    const MetricExtensor g = s.metric(c.g.signature());
    return congruence_residual(gauge_extensor(g, standard_eta(g.signature())));
  });
  add("gauge.session_congruence", 1e-8, [](Sampler&, const Context& c) {
    return congruence_residual(c.gauge) / std::max(1.0, c.g.op().matrix().max_abs());
  });
  static const char* const golden_names[] = {"golden.wedge", "golden.scalar", "golden.contract_left",
                                             "golden.contract_right", "golden.clifford"};
  for (std::size_t i = 0; i < std::size(kProducts); ++i) {
    const Product op = kProducts[i];
    add(golden_names[i], 1e-8, [op](Sampler& s, const Context& c) {
      const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
      return rel(metric_product(x, y, c.g, op), golden_product(x, y, c.gauge, op));
    });
  }
  add("eta.rotated_frame", 1e-10, [](Sampler& s, const Context& c) {
    const int p = s.integer(0, c.n);
    const Matrix theta = s.orthogonal(c.n);
    std::vector<Vector> frame;
    for (int j = 0; j < c.n; ++j) frame.push_back(theta.column(j));
    const LinOp11 rot(theta);
    const LinOp11 expected = rot * standard_eta({p, c.n - p}).op() * adjoint(rot);
    return rel(eta_signature(p, frame).op(), expected);
  });
  add("eta.sandwich", 1e-10, [](Sampler& s, const Context& c) {
    const int p = s.integer(0, c.n);
    const Matrix theta = s.orthogonal(c.n);
    std::vector<Vector> frame;
    for (int j = 0; j < c.n; ++j) frame.push_back(theta.column(j));
    const Vector v = s.vector(c.n);
    return rel(Multivector::vector(c.n, eta_sandwich_apply(p, frame, v)),
               Multivector::vector(c.n, eta_signature(p, frame).op().apply(v)));
  });

  add("hodge.volume_norm", 0.0, [](Sampler&, const Context& c) {
    return std::abs(scalar_product(c.tau.tau, c.tau.tau) - 1.0);
  });
  add("hodge.isometry", 1e-10, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
    return rel(scalar_product(hodge_star(x), hodge_star(y)), scalar_product(x, y));
  });
  add("hodge.wedge_duality", 1e-10, [](Sampler& s, const Context& c) {
    const int k = s.integer(0, c.n);
    const Multivector x = s.homogeneous(c.n, k), y = s.homogeneous(c.n, k);
    return rel(wedge(x, hodge_star(y)), scalar_product(x, y) * c.tau.tau);
  });
  add("hodge.complement_duality", 1e-10, [](Sampler& s, const Context& c) {
    const int p = s.integer(0, c.n);
    const Multivector x = s.homogeneous(c.n, p), y = s.homogeneous(c.n, c.n - p);
    return rel(scalar_product(hodge_star(x), y) * c.tau.tau, wedge(x, y));
  });
  add("hodge.round_trip", 1e-12, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n);
    return std::max(rel(hodge_star_inverse(hodge_star(x)), x), rel(hodge_star(hodge_star_inverse(x)), x));
  });
  add("metric_hodge.volume_norm", 1e-10, [](Sampler&, const Context& c) {
    return rel(scalar_product_g(c.tau_g.tau, c.tau_g.tau, c.g_inv), sign_pow(c.q));
  });
  add("metric_hodge.pseudoscalar_expansion", 1e-10, [](Sampler& s, const Context& c) {
    const Multivector i = s.homogeneous(c.n, c.n);
    return rel(sign_pow(c.q) * scalar_product_g(i, c.tau_g.tau, c.g_inv) * c.tau_g.tau, i);
  });
  add("metric_hodge.isometry", 1e-9, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n), y = s.multivector(c.n);
    return rel(scalar_product_g(metric_hodge(x, c.g), metric_hodge(y, c.g), c.g_inv),
               sign_pow(c.q) * scalar_product_g(x, y, c.g_inv));
  });
  add("metric_hodge.wedge_duality", 1e-9, [](Sampler& s, const Context& c) {
    const int k = s.integer(0, c.n);
    const Multivector x = s.homogeneous(c.n, k), y = s.homogeneous(c.n, k);
    return rel(wedge(x, metric_hodge(y, c.g)), scalar_product_g(x, y, c.g_inv) * c.tau_g.tau);
  });
  add("metric_hodge.complement_duality", 1e-9, [](Sampler& s, const Context& c) {
    const int p = s.integer(0, c.n);
    const Multivector x = s.homogeneous(c.n, p), y = s.homogeneous(c.n, c.n - p);
    return rel(scalar_product_g(metric_hodge(x, c.g), y, c.g_inv) * c.tau_g.tau, sign_pow(c.q) * wedge(x, y));
  });
  add("metric_hodge.round_trip", 1e-9, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n);
    return rel(metric_hodge_inverse(metric_hodge(x, c.g), c.g), x);
  });
  add("metric_hodge.three_paths", 1e-8, [](Sampler& s, const Context& c) {
    const Multivector x = s.multivector(c.n);
    const Multivector direct = metric_hodge(x, c.g);
    return std::max(rel(direct, metric_hodge_via_g(x, c.g)), rel(direct, metric_hodge_via_gauge(x, c.gauge)));
  });
  return list;
}

// splitmix64 finalizer: decorrelates the per-identity streams.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

IdentityResult run(const Identity& id, std::uint64_t seed, int trials, const Context& ctx,
                   const std::optional<double>& override_tol) {
  IdentityResult r;
  r.name = id.name;
  r.trials = trials;
  r.tolerance = override_tol.value_or(id.tolerance);
  Sampler sampler(seed);
  try {
    for (int t = 0; t < trials; ++t) {
      const double res = id.trial(sampler, ctx);
      if (std::isnan(res)) throw NumericError("residual is NaN");
      r.max_residual = std::max(r.max_residual, res);
    }
    r.passed = r.max_residual <= r.tolerance;
  } catch (const Error& e) {
    r.error = e.what();
    r.max_residual = std::numeric_limits<double>::infinity();
    r.passed = false;
  }
  return r;
}

} // namespace

bool CheckReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.passed; });
}

std::string CheckReport::text() const {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "identity check: n=%d signature=(%d,%d) seed=%llu trials=%d\n", n, signature.p,
                signature.q, static_cast<unsigned long long>(seed), trials);
  out += buf;
  int passed_count = 0;
  for (const auto& r : results) {
    passed_count += r.passed ? 1 : 0;
    std::snprintf(buf, sizeof buf, "%-38s trials=%-6d max_residual=%.3e tol=%.1e %s", r.name.c_str(), r.trials,
                  r.max_residual, r.tolerance, r.passed ? "PASS" : "FAIL");
    out += buf;
    if (!r.error.empty()) out += " (" + r.error + ")";
    out += '\n';
  }
  std::snprintf(buf, sizeof buf, "summary: %d/%zu passed\n", passed_count, results.size());
  out += buf;
  return out;
}

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& id : identities()) names.emplace_back(id.name);
  return names;
}

CheckReport check_identities(const SessionConfig& cfg, std::uint64_t seed, int trials) {
  if (trials < 1) throw ArgumentError("trials must be at least 1, got " + std::to_string(trials));
  const MetricExtensor& g = cfg.metric;
  const Context ctx{cfg.n,
                    g,
                    metric_inverse(g),
                    gauge_extensor(g, standard_eta(g.signature())),
                    standard_volume(cfg.n),
                    metric_volume(g),
                    g.signature().q};

  const auto list = identities();
  std::vector<std::future<IdentityResult>> pending;
  pending.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    pending.push_back(std::async(std::launch::async, run, std::cref(list[i]), stream_seed(seed, i), trials,
                                 std::cref(ctx), std::cref(cfg.tolerance)));
  }
  CheckReport report;
  report.n = cfg.n;
  report.signature = g.signature();
  report.seed = seed;
  report.trials = trials;
  for (auto& f : pending) report.results.push_back(f.get());
  return report;
}

} // namespace gakit::cli
