#include "detail.hpp"

namespace gakit::detail {

Multivector wedge_vector_right(const Multivector& z, std::span<const double> v) {
  const int n = z.dim();
  Multivector out(n);
  for (BladeMask b = 0; b < z.size(); ++b) {
    const double zb = z[b];
    if (zb == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const BladeMask e = BladeMask{1} << i;
      if ((b & e) || v[i] == 0.0) continue;
      out[b | e] += canonical_reorder_sign(b, e) * zb * v[i];
    }
  }
  return out;
}

Multivector wedge_vector_left(std::span<const double> v, const Multivector& z) {
  const int n = z.dim();
  Multivector out(n);
  for (BladeMask b = 0; b < z.size(); ++b) {
    const double zb = z[b];
    if (zb == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const BladeMask e = BladeMask{1} << i;
      if ((b & e) || v[i] == 0.0) continue;
      out[b | e] += canonical_reorder_sign(e, b) * zb * v[i];
    }
  }
  return out;
}

Multivector contract_vector_left(std::span<const double> v, const Multivector& z) {
  const int n = z.dim();
  Multivector out(n);
  for (BladeMask b = 0; b < z.size(); ++b) {
    const double zb = z[b];
    if (zb == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      const BladeMask e = BladeMask{1} << i;
      if (!(b & e) || v[i] == 0.0) continue;
      out[b & ~e] += canonical_reorder_sign(e, b) * zb * v[i];
    }
  }
  return out;
}

} // namespace gakit::detail
