#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace plectic6 {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dimension) : components_(dimension, 0.0) {}
  explicit Vector(std::vector<double> components) : components_(std::move(components)) {}
  Vector(std::initializer_list<double> components) : components_(components) {}

  // e_i, 1-based.
  static Vector basis(std::size_t dimension, int index);

  std::size_t dimension() const noexcept { return components_.size(); }
  double operator[](std::size_t i) const { return components_[i]; }
  double& operator[](std::size_t i) { return components_[i]; }
  std::span<const double> components() const noexcept { return components_; }

  Vector& operator+=(const Vector& other);
  Vector& operator*=(double c);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator*(double c, Vector v) { return v *= c; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> components_;
};

// Dense row-major matrix used for the small systems in this library.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const double> data() const noexcept { return data_; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  Matrix transpose() const;
  double trace() const;
  double max_abs() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(double c, Matrix m) { return m *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Gaussian elimination with partial pivoting. A column whose best remaining
// pivot has magnitude <= threshold is treated as dependent.
std::size_t rank(const Matrix& m, double threshold);
std::vector<Vector> null_space(const Matrix& m, double threshold);

double determinant(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws InputError when singular

// Square matrix acting on column vectors: column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m);

  static LinearMap identity(std::size_t n) { return LinearMap(Matrix::identity(n)); }
  static LinearMap scaling(std::size_t n, double c) { return LinearMap(c * Matrix::identity(n)); }

  std::size_t dimension() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  double operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

  Vector apply(const Vector& v) const { return matrix_ * v; }
  double determinant() const { return plectic6::determinant(matrix_); }
  bool is_invertible(double tol = 1e-12) const;
  LinearMap inverse() const { return LinearMap(plectic6::inverse(matrix_)); }

  // (g * h)(v) = g(h(v)).
  friend LinearMap operator*(const LinearMap& g, const LinearMap& h) {
    return LinearMap(g.matrix_ * h.matrix_);
  }

 private:
  Matrix matrix_;
};

}  // namespace plectic6
