#pragma once

// Brute-force reference implementations used to freeze expected values. None of these share
// code paths with the library kernels they check.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "gakit/matrix.hpp"
#include "gakit/multivector.hpp"

namespace oracle {

using gakit::Matrix;
using gakit::Multivector;

inline int permutation_parity(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline double leibniz_det(const Matrix& a) {
  std::vector<int> perm(static_cast<std::size_t>(a.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    double term = permutation_parity(perm);
    for (int r = 0; r < a.rows(); ++r) term *= a(r, perm[static_cast<std::size_t>(r)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Solves A x = e_j column by column with forward elimination and back substitution.
inline Matrix solve_inverse(const Matrix& a) {
  const int n = a.rows();
  Matrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<std::vector<double>> aug(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n + 1)));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) aug[r][c] = a(r, c);
      aug[r][n] = r == j ? 1.0 : 0.0;
    }
    for (int c = 0; c < n; ++c) {
      int pivot = c;
      for (int r = c + 1; r < n; ++r) {
        if (std::abs(aug[r][c]) > std::abs(aug[pivot][c])) pivot = r;
      }
      std::swap(aug[c], aug[pivot]);
      for (int r = c + 1; r < n; ++r) {
        const double f = aug[r][c] / aug[c][c];
        for (int k = c; k <= n; ++k) aug[r][k] -= f * aug[c][k];
      }
    }
    for (int r = n - 1; r >= 0; --r) {
      double s = aug[r][n];
      for (int k = r + 1; k < n; ++k) s -= aug[r][k] * inv(k, j);
      inv(r, j) = s / aug[r][r];
    }
  }
  return inv;
}

// Elements of the Clifford algebra as linear combinations of normal-ordered words
// e_{i1} e_{i2} ... e_{ik} (i1 < i2 < ...), reduced with e_j e_i = -e_i e_j + 2 G_ij and
// e_i e_i = G_ii. Indices are 1-based.
using Poly = std::map<std::vector<int>, double>;

inline void add_into(Poly& out, const Poly& p, double scale) {
  for (const auto& [w, c] : p) out[w] += scale * c;
}

inline Poly reduce_word(const std::vector<int>& w, const Matrix& g) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] < w[i + 1]) continue;
    std::vector<int> rest(w.begin(), w.begin() + static_cast<long>(i));
    rest.insert(rest.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    const double gij = g(w[i] - 1, w[i + 1] - 1);
    Poly out;
    if (w[i] == w[i + 1]) {
      add_into(out, reduce_word(rest, g), gij);
    } else {
      std::vector<int> swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      add_into(out, reduce_word(swapped, g), -1.0);
      add_into(out, reduce_word(rest, g), 2.0 * gij);
    }
    return out;
  }
  return Poly{{w, 1.0}};
}

inline Poly poly_product(const Poly& a, const Poly& b, const Matrix& g) {
  Poly out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      std::vector<int> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_into(out, reduce_word(w, g), ca * cb);
    }
  }
  return out;
}

// Each canonical blade e_A is the antisymmetrized product (1/k!) sum sgn(s) e_{A s(1)}...e_{A s(k)}.
inline Poly to_poly(const Multivector& x, const Matrix& g) {
  Poly out;
  for (std::size_t m = 0; m < x.size(); ++m) {
    const double c = x[static_cast<gakit::BladeMask>(m)];
    if (c == 0.0) continue;
    std::vector<int> idx = gakit::indices_of(static_cast<gakit::BladeMask>(m));
    std::vector<int> perm(idx.size());
    std::iota(perm.begin(), perm.end(), 0);
    double count = 0.0;
    Poly blade;
    do {
      std::vector<int> w;
      for (int p : perm) w.push_back(idx[static_cast<std::size_t>(p)]);
      add_into(blade, reduce_word(w, g), permutation_parity(perm));
      count += 1.0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    add_into(out, blade, c / count);
  }
  return out;
}

inline double poly_diff(const Poly& a, const Poly& b) {
  double worst = 0.0;
  for (const auto& [w, c] : a) {
    const auto it = b.find(w);
    worst = std::max(worst, std::abs(c - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [w, c] : b) {
    if (a.find(w) == a.end()) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

// Euclidean exterior product of blades by concatenation and permutation parity.
inline Multivector wedge_by_parity(const Multivector& x, const Multivector& y) {
  Multivector out(x.dim());
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      const auto ma = static_cast<gakit::BladeMask>(a), mb = static_cast<gakit::BladeMask>(b);
      if ((ma & mb) != 0 || x[ma] == 0.0 || y[mb] == 0.0) continue;
      std::vector<int> w = gakit::indices_of(ma);
      const auto wb = gakit::indices_of(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      out[ma | mb] += permutation_parity(w) * x[ma] * y[mb];
    }
  }
  return out;
}

// Euclidean scalar product of simple blades as the Gram determinant of their factors.
inline double blade_scalar_by_gram(gakit::BladeMask a, gakit::BladeMask b, const Matrix& g) {
  const auto ia = gakit::indices_of(a), ib = gakit::indices_of(b);
  if (ia.size() != ib.size()) return 0.0;
  if (ia.empty()) return 1.0;
  const int k = static_cast<int>(ia.size());
  Matrix gram(k, k);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) gram(r, c) = g(ia[static_cast<std::size_t>(r)] - 1, ib[static_cast<std::size_t>(c)] - 1);
  }
  return leibniz_det(gram);
}

} // namespace oracle
