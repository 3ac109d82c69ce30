#pragma once

#include <span>
#include <vector>

namespace gakit {

/// Small dense row-major real matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix diagonal(std::span<const double> d);
  /// Throws ArgumentError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<double> column(int c) const;
  std::vector<std::vector<double>> to_rows() const;

  Matrix transpose() const;
  std::vector<double> apply(std::span<const double> v) const;
  double max_abs() const noexcept;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(double s) noexcept;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix&) const = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Outer product u v^T.
Matrix outer(std::span<const double> u, std::span<const double> v);

double dot(std::span<const double> a, std::span<const double> b);

/// Gauss-Jordan with partial pivoting. Throws SingularityError when a pivot vanishes.
Matrix gauss_jordan_inverse(const Matrix& a);

/// LU determinant with partial pivoting.
double lu_determinant(const Matrix& a);

struct SymmetricEigen {
  std::vector<double> values;               // descending
  std::vector<std::vector<double>> vectors; // vectors[j] pairs with values[j]
};

/// Cyclic Jacobi rotations on a symmetric matrix. Stops when the off-diagonal Frobenius norm
/// drops below 1e-14 (relative to the matrix norm, floored at 1); throws NumericError after
/// 100 sweeps. Eigenvalues are sorted descending and each eigenvector is signed so that its
/// largest-magnitude coordinate (lowest index on ties) is positive.
SymmetricEigen jacobi_symmetric(const Matrix& a);

} // namespace gakit
