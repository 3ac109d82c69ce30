#include "gakit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gakit/error.hpp"

namespace gakit {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ArgumentError("negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  const int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ArgumentError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<double> Matrix::column(int c) const {
  std::vector<double> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<double> Matrix::apply(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != cols_) throw ArgumentError("matrix/vector shape mismatch");
  std::vector<double> out(rows_, 0.0);
  for (int r = 0; r < rows_; ++r) {
    double s = 0.0;
    for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

double Matrix::max_abs() const noexcept {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ArgumentError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ArgumentError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) noexcept {
  for (double& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ArgumentError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

Matrix outer(std::span<const double> u, std::span<const double> v) {
  Matrix m(static_cast<int>(u.size()), static_cast<int>(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = u[i] * v[j];
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("vector length mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

Matrix gauss_jordan_inverse(const Matrix& a) {
  if (!a.is_square()) throw ArgumentError("inverse of a non-square matrix");
  const int n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    }
    if (work(pivot, col) == 0.0) throw SingularityError("matrix is singular", 0.0);
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const double p = work(col, col);
    for (int c = 0; c < n; ++c) {
      work(col, c) /= p;
      inv(col, c) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = work(r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

double lu_determinant(const Matrix& a) {
  if (!a.is_square()) throw ArgumentError("determinant of a non-square matrix");
  const int n = a.rows();
  Matrix w = a;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(w(r, col)) > std::abs(w(pivot, col))) pivot = r;
    }
    if (w(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(w(pivot, c), w(col, c));
      det = -det;
    }
    det *= w(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = w(r, col) / w(col, col);
      for (int c = col; c < n; ++c) w(r, c) -= f * w(col, c);
    }
  }
  return det;
}

SymmetricEigen jacobi_symmetric(const Matrix& a) {
  if (!a.is_square()) throw ArgumentError("eigendecomposition of a non-square matrix");
  const int n = a.rows();
  Matrix w = a;
  Matrix v = Matrix::identity(n);

  double norm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm += w(i, j) * w(i, j);
  const double threshold = 1e-14 * std::max(1.0, std::sqrt(norm));

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * w(i, j) * w(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (apq == 0.0) continue;
        const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double wkp = w(k, p);
          const double wkq = w(k, q);
          w(k, p) = c * wkp - s * wkq;
          w(k, q) = s * wkp + c * wkq;
        }
        for (int k = 0; k < n; ++k) {
          const double wpk = w(p, k);
          const double wqk = w(q, k);
          w(p, k) = c * wpk - s * wqk;
          w(q, k) = s * wpk + c * wqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_norm() > threshold) {
    throw NumericError("Jacobi eigensolver did not converge after " + std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return w(i, i) > w(j, j); });

  SymmetricEigen out;
  for (int idx : order) {
    out.values.push_back(w(idx, idx));
    std::vector<double> vec = v.column(idx);
    int lead = 0;
    for (int k = 1; k < n; ++k) {
      if (std::abs(vec[k]) > std::abs(vec[lead])) lead = k;
    }
    if (vec[lead] < 0.0) {
      for (double& x : vec) x = -x;
    }
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

} // namespace gakit
