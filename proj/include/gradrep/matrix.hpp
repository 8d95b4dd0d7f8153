#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradrep/scalar.hpp"

namespace gradrep {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, int rows, int cols);

  static Matrix zero(Field f, int rows, int cols) { return Matrix(f, rows, cols); }
  static Matrix identity(Field f, int n);
  /// Row-major integer literal, mostly for tests.
  static Matrix from_ints(Field f, const std::vector<std::vector<long>>& rows);
  static Matrix column_vector(const std::vector<Scalar>& v, Field f);

  Field field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(int r, int c) const { return data_[idx(r, c)]; }
  Scalar& operator()(int r, int c) { return data_[idx(r, c)]; }
  const std::vector<Scalar>& data() const noexcept { return data_; }

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  Matrix column(int c) const;
  std::vector<Scalar> column_values(int c) const;
  Matrix select_columns(const std::vector<int>& cols) const;
  Matrix select_rows(const std::vector<int>& rows) const;
  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  void check_field(const Matrix& o) const;

  Field field_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;           // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column per row of `reduced`
};

/// Reduced row echelon form. Over Q the forward pass is fraction-free
/// (Bareiss) with a smallest-bit-size pivot among the candidates in the
/// leftmost available column; over F_p it is plain Gauss-Jordan.
RrefResult rref(const Matrix& a);

struct KernelImage {
  Matrix kernel;  // cols x nullity, one basis vector per column
  Matrix image;   // rows x rank, pivot columns of A
  int rank = 0;
};

KernelImage kernel_image(const Matrix& a);
Matrix kernel(const Matrix& a);
int rank(const Matrix& a);

/// X with A X = B, or nullopt. Throws InputError on a row-count mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Columns forming a basis of the column space, chosen as the pivot columns.
Matrix column_basis(const Matrix& a);

/// Unit vectors completing the column space of `sub` (n x k) to k^n, taken at
/// the non-pivot coordinates of the echelon form of sub^T.
Matrix complement_units(const Matrix& sub, int n);

/// Basis of the intersection of two column spaces inside k^n.
Matrix intersect(const Matrix& a, const Matrix& b, int n);

/// Square invertible matrix inverse, nullopt if singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace gradrep
