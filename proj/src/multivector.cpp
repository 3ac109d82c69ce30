#include "gakit/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gakit/error.hpp"

namespace gakit {

Multivector::Multivector(int n) : dim_(n) {
  if (n < 1 || n > kMaxDim) {
    throw ArgumentError("dimension " + std::to_string(n) + " outside 1.." + std::to_string(kMaxDim));
  }
  coeffs_.assign(blade_count(n), 0.0);
}

Multivector Multivector::scalar(int n, double value) {
  Multivector x(n);
  x.coeffs_[0] = value;
  return x;
}

Multivector Multivector::basis_vector(int n, int index) {
  if (index < 1 || index > n) {
    throw ArgumentError("basis index " + std::to_string(index) + " outside 1.." + std::to_string(n));
  }
  return blade(n, BladeMask{1} << (index - 1));
}

Multivector Multivector::blade(int n, BladeMask mask, double coeff) {
  Multivector x(n);
  if (mask >= x.size()) throw ArgumentError("blade mask exceeds dimension");
  x.coeffs_[mask] = coeff;
  return x;
}

Multivector Multivector::vector(int n, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != n) throw ArgumentError("vector length must equal dimension");
  Multivector x(n);
  for (int i = 0; i < n; ++i) x.coeffs_[BladeMask{1} << i] = coords[i];
  return x;
}

Multivector Multivector::unit_pseudoscalar(int n) {
  Multivector x(n);
  x.coeffs_.back() = 1.0;
  return x;
}

std::vector<double> Multivector::vector_part() const {
  std::vector<double> v(dim_);
  for (int i = 0; i < dim_; ++i) v[i] = coeffs_[BladeMask{1} << i];
  return v;
}

double Multivector::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Multivector::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) noexcept {
  for (double& c : coeffs_) c *= s;
  return *this;
}

void require_same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) {
    throw ArgumentError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  return m;
}

Multivector grade_project(const Multivector& x, int k) {
  Multivector out(x.dim());
  if (k < 0 || k > x.dim()) return out;
  for (BladeMask m = 0; m < x.size(); ++m) {
    if (grade_of(m) == k) out[m] = x[m];
  }
  return out;
}

namespace {

int involution_sign(int k, Involution kind) {
  int exponent = 0;
  switch (kind) {
    case Involution::grade: exponent = k; break;
    case Involution::reverse: exponent = k * (k - 1) / 2; break;
    case Involution::conjugate: exponent = k * (k + 1) / 2; break;
  }
  return (exponent & 1) ? -1 : 1;
}

} // namespace

Multivector involution(const Multivector& x, Involution kind) {
  Multivector out = x;
  for (BladeMask m = 0; m < out.size(); ++m) {
    if (involution_sign(grade_of(m), kind) < 0) out[m] = -out[m];
  }
  return out;
}

} // namespace gakit
