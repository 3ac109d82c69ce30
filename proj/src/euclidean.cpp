#include "gakit/euclidean.hpp"

namespace gakit {

namespace {

// Accumulates sum over nonzero blade pairs of x_A y_B rule(A, B), where rule returns the
// target blade and a sign (0 drops the term).
template <typename Rule>
Multivector blade_bilinear(const Multivector& x, const Multivector& y, Rule rule) {
  require_same_dim(x, y);
  Multivector out(x.dim());
  const auto size = static_cast<BladeMask>(x.size());
  for (BladeMask a = 0; a < size; ++a) {
    const double xa = x[a];
    if (xa == 0.0) continue;
    for (BladeMask b = 0; b < size; ++b) {
      const double yb = y[b];
      if (yb == 0.0) continue;
      BladeMask target = 0;
      const int sign = rule(a, b, target);
      if (sign != 0) out[target] += sign * xa * yb;
    }
  }
  return out;
}

} // namespace

Multivector wedge(const Multivector& x, const Multivector& y) {
  return blade_bilinear(x, y, [](BladeMask a, BladeMask b, BladeMask& t) {
    if (a & b) return 0;
    t = a | b;
    return canonical_reorder_sign(a, b);
  });
}

double scalar_product(const Multivector& x, const Multivector& y) {
  require_same_dim(x, y);
  double s = 0.0;
  for (BladeMask m = 0; m < x.size(); ++m) s += x[m] * y[m];
  return s;
}

Multivector contract_left(const Multivector& x, const Multivector& y) {
  return blade_bilinear(x, y, [](BladeMask a, BladeMask b, BladeMask& t) {
    if ((a & b) != a) return 0;
    t = b & ~a;
    return canonical_reorder_sign(a, b);
  });
}

Multivector contract_right(const Multivector& x, const Multivector& y) {
  return blade_bilinear(x, y, [](BladeMask a, BladeMask b, BladeMask& t) {
    if ((a & b) != b) return 0;
    t = a & ~b;
    return canonical_reorder_sign(a, b);
  });
}

Multivector clifford_product(const Multivector& x, const Multivector& y) {
  // Shared factors contract with e_i e_i = +1, so only the reordering sign survives.
  return blade_bilinear(x, y, [](BladeMask a, BladeMask b, BladeMask& t) {
    t = a ^ b;
    return canonical_reorder_sign(a, b);
  });
}

Multivector commutator(const Multivector& x, const Multivector& y) {
  return (clifford_product(x, y) - clifford_product(y, x)) * 0.5;
}

} // namespace gakit
