#include "gradrep/matrix.hpp"

#include <sstream>

#include "gradrep/error.hpp"

namespace gradrep {

Matrix::Matrix(Field f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

Matrix Matrix::identity(Field f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix literal");
    for (int j = 0; j < c; ++j) m(i, j) = Scalar::from_int(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column_vector(const std::vector<Scalar>& v, Field f) {
  Matrix m(f, static_cast<int>(v.size()), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

void Matrix::check_field(const Matrix& o) const {
  if (!(field_ == o.field_))
    throw InputError("mixed field tags: " + field_.to_string() + " vs " + o.field_.to_string());
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_field(o);
  if (cols_ != o.rows_)
    throw InputError("matrix product shape mismatch " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                     std::to_string(o.cols_));
  Matrix p(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) p(i, j) += a * b;
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(*this);
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix Matrix::column(int c) const { return block(0, c, rows_, 1); }

std::vector<Scalar> Matrix::column_values(int c) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
  return v;
}

Matrix Matrix::select_columns(const std::vector<int>& cols) const {
  Matrix m(field_, rows_, static_cast<int>(cols.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, static_cast<int>(j)) = (*this)(i, cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<int>& rows) const {
  Matrix m(field_, static_cast<int>(rows.size()), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols_; ++j) m(static_cast<int>(i), j) = (*this)(rows[i], j);
  return m;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw InternalError("matrix block out of range");
  Matrix m(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Matrix::set_block(int r0, int c0, const Matrix& b) {
  check_field(b);
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw InternalError("matrix set_block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  a.check_field(b);
  if (a.rows_ != b.rows_) throw InputError("hstack row mismatch");
  Matrix m(a.field_, a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  a.check_field(b);
  if (a.cols_ != b.cols_) throw InputError("vstack column mismatch");
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

RrefResult rref_rational(const Matrix& a) {
  const int m = a.rows(), n = a.cols();
  std::vector<std::vector<mpz_class>> rows(m, std::vector<mpz_class>(n));
  for (int i = 0; i < m; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).rational().get_den_mpz_t());
    for (int j = 0; j < n; ++j) {
      const mpq_class& q = a(i, j).rational();
      rows[i][j] = q.get_num() * (l / q.get_den());
    }
  }

  std::vector<int> pivots;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int best = -1;
    std::size_t best_bits = 0;
    for (int i = r; i < m; ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      std::size_t bits = mpz_sizeinbase(rows[i][c].get_mpz_t(), 2);
      if (best < 0 || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best < 0) continue;
    std::swap(rows[r], rows[best]);
    const mpz_class piv = rows[r][c];
    for (int i = r + 1; i < m; ++i) {
      const mpz_class f = rows[i][c];
      for (int j = c; j < n; ++j) {
        mpz_class v = piv * rows[i][j] - f * rows[r][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
          throw InternalError("Bareiss division not exact");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(v);
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }

  const int rk = static_cast<int>(pivots.size());
  std::vector<std::vector<mpq_class>> q(rk, std::vector<mpq_class>(n));
  for (int i = 0; i < rk; ++i) {
    const mpz_class& lead = rows[i][pivots[i]];
    for (int j = 0; j < n; ++j) {
      q[i][j] = mpq_class(rows[i][j], lead);
      q[i][j].canonicalize();
    }
  }
  for (int i = rk - 1; i >= 0; --i) {
    const int pc = pivots[i];
    for (int k = 0; k < i; ++k) {
      if (sgn(q[k][pc]) == 0) continue;
      const mpq_class f = q[k][pc];
      for (int j = pc; j < n; ++j)
        if (sgn(q[i][j]) != 0) q[k][j] -= f * q[i][j];
    }
  }

  RrefResult out{Matrix(a.field(), rk, n), pivots};
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < n; ++j) out.reduced(i, j) = Scalar::from_rational(a.field(), q[i][j]);
  return out;
}

RrefResult rref_prime(const Matrix& a) {
  const int m = a.rows(), n = a.cols();
  const std::uint64_t p = a.field().modulus;
  std::vector<std::vector<std::uint64_t>> rows(m, std::vector<std::uint64_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = a(i, j).residue();

  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int best = -1;
    for (int i = r; i < m; ++i)
      if (rows[i][c] != 0) {
        best = i;
        break;
      }
    if (best < 0) continue;
    std::swap(rows[r], rows[best]);
    const std::uint64_t inv = detail::mod_inverse(static_cast<std::uint32_t>(rows[r][c]), static_cast<std::uint32_t>(p));
    for (int j = c; j < n; ++j) rows[r][j] = rows[r][j] * inv % p;
    for (int i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (int j = c; j < n; ++j)
        rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  const int rk = static_cast<int>(pivots.size());
  RrefResult out{Matrix(a.field(), rk, n), pivots};
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < n; ++j)
      out.reduced(i, j) = Scalar::from_int(a.field(), static_cast<long>(rows[i][j]));
  return out;
}

}  // namespace

RrefResult rref(const Matrix& a) {
  return a.field().is_rational() ? rref_rational(a) : rref_prime(a);
}

KernelImage kernel_image(const Matrix& a) {
  RrefResult r = rref(a);
  const int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  KernelImage out;
  out.rank = static_cast<int>(r.pivots.size());
  out.kernel = Matrix(a.field(), n, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int fc = free_cols[k];
    out.kernel(fc, static_cast<int>(k)) = Scalar::one(a.field());
    for (int i = 0; i < out.rank; ++i)
      out.kernel(r.pivots[i], static_cast<int>(k)) = -r.reduced(i, fc);
  }
  out.image = a.select_columns(r.pivots);
  return out;
}

Matrix kernel(const Matrix& a) { return kernel_image(a).kernel; }

int rank(const Matrix& a) { return static_cast<int>(rref(a).pivots.size()); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw InputError("solve: A has " + std::to_string(a.rows()) + " rows, B has " +
                     std::to_string(b.rows()));
  const int n = a.cols();
  RrefResult r = rref(Matrix::hstack(a, b));
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    const int pc = r.pivots[i];
    if (pc >= n) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x(pc, j) = r.reduced(static_cast<int>(i), n + j);
  }
  return x;
}

Matrix column_basis(const Matrix& a) { return kernel_image(a).image; }

Matrix complement_units(const Matrix& sub, int n) {
  std::vector<bool> is_pivot(n, false);
  if (sub.cols() > 0) {
    RrefResult r = rref(sub.transpose());
    for (int c : r.pivots) is_pivot[c] = true;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix m(sub.field(), n, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k)
    m(free_cols[k], static_cast<int>(k)) = Scalar::one(sub.field());
  return m;
}

Matrix intersect(const Matrix& a, const Matrix& b, int n) {
  Field f = a.field();
  if (a.cols() == 0 || b.cols() == 0) return Matrix(f, n, 0);
  Matrix ker = kernel(Matrix::hstack(a, b.scaled(-Scalar::one(f))));
  Matrix coords = ker.block(0, 0, a.cols(), ker.cols());
  if (coords.cols() == 0) return Matrix(f, n, 0);
  return column_basis(a * coords);
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.field(), a.rows()));
}

}  // namespace gradrep
