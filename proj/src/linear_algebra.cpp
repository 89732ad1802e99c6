#include "plectic6/linear_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "plectic6/error.hpp"

namespace plectic6 {

Vector Vector::basis(std::size_t dimension, int index) {
  if (index < 1 || static_cast<std::size_t>(index) > dimension)
    throw InputError("basis index " + std::to_string(index) + " out of range");
  Vector v(dimension);
  v[index - 1] = 1.0;
  return v;
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.dimension() != dimension()) throw InputError("vector dimension mismatch");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

Vector& Vector::operator*=(double c) {
  for (double& x : components_) x *= c;
  return *this;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw InputError("matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.dimension() != rows_) throw InputError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Matrix::trace() const {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::abs(x));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(double c) {
  for (double& x : data_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.dimension()) throw InputError("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

namespace {

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of row r
};

Echelon row_reduce(Matrix m, double threshold) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < m.rows(); ++r)
      if (std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
    if (!(std::abs(m(best, col)) > threshold)) {
      for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = 0.0;
      continue;
    }
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    const double p = m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) /= p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const double f = m(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

}  // namespace

std::size_t rank(const Matrix& m, double threshold) {
  return row_reduce(m, threshold).pivots.size();
}

std::vector<Vector> null_space(const Matrix& m, double threshold) {
  const Echelon e = row_reduce(m, threshold);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1.0;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

double determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(best, col))) best = r;
    if (a(best, col) == 0.0) return 0.0;
    if (best != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(best, c));
      det = -det;
    }
    const double p = a(col, col);
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / p;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1.0;
  }
  const Echelon e = row_reduce(aug, 1e-14 * std::max(1.0, m.max_abs()));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InputError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

LinearMap::LinearMap(Matrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols()) throw InputError("linear map must be square");
}

bool LinearMap::is_invertible(double tol) const {
  return std::abs(determinant()) > tol;
}

}  // namespace plectic6
