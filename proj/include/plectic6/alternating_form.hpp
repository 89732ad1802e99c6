#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "plectic6/linear_algebra.hpp"
#include "plectic6/multi_index.hpp"

namespace plectic6 {

// Sign conventions (used everywhere in the library):
//   * forms are evaluated with dx^I(e_I) = 1, i.e. a(v1..vk) = sum_I a_I det(v[I]);
//   * wedge: dx^I ^ dx^J = (-1)^{inv(I|J)} dx^{I u J}, where inv counts the
//     transpositions that sort the concatenation I|J;
//   * interior product: removing the p-th listed index (1-based) of I
//     contributes (-1)^{p-1}, so i_{e_j} dvol = (-1)^{j-1} dx^{1..^j..n}.
class AlternatingForm {
 public:
  AlternatingForm() = default;
  AlternatingForm(int dimension, int degree);
  AlternatingForm(int dimension, int degree, std::vector<double> coefficients);

  static AlternatingForm scalar(int dimension, double value);

  int dimension() const noexcept { return dimension_; }
  int degree() const noexcept { return degree_; }

  // Dense coefficients, one per multi-index in lexicographic order.
  std::span<const double> coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }

  double coefficient(const MultiIndex& index) const;
  double coefficient(IndexMask mask) const;
  AlternatingForm& add(const MultiIndex& index, double value);
  AlternatingForm& add(IndexMask mask, double value);

  // a(v1, ..., vk); vectors.size() must equal the degree.
  double evaluate(std::span<const Vector> vectors) const;

  double max_abs() const noexcept;
  bool is_zero() const noexcept;
  std::string to_string() const;

  AlternatingForm& operator+=(const AlternatingForm& other);
  AlternatingForm& operator-=(const AlternatingForm& other);
  AlternatingForm& operator*=(double c);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator-(AlternatingForm a, const AlternatingForm& b) { return a -= b; }
  friend AlternatingForm operator-(AlternatingForm a) { return a *= -1.0; }
  friend AlternatingForm operator*(double c, AlternatingForm a) { return a *= c; }
  friend bool operator==(const AlternatingForm&, const AlternatingForm&) = default;

 private:
  void require_same_shape(const AlternatingForm& other) const;

  int dimension_ = 0;
  int degree_ = 0;
  std::vector<double> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const AlternatingForm& a);

// Equality up to tol * max(1, max|a|, max|b|) per coefficient.
bool approx_equal(const AlternatingForm& a, const AlternatingForm& b, double tol = 1e-9);
double max_abs_difference(const AlternatingForm& a, const AlternatingForm& b);

AlternatingForm basis_form(int dimension, const MultiIndex& indices);
AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b);
AlternatingForm contract(const Vector& v, const AlternatingForm& a);
// (g^* a)(v1..vk) = a(g v1, ..., g vk).
AlternatingForm pullback(const LinearMap& g, const AlternatingForm& a);

// binomial(n, k-1) x n; column j holds the coefficients of i_{e_j} a.
Matrix flat_matrix(const AlternatingForm& a);
bool is_nondegenerate(const AlternatingForm& a, double tol = 1e-9);

}  // namespace plectic6
