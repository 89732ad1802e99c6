#include "plectic6/alternating_form.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "plectic6/error.hpp"

namespace plectic6 {

namespace {

void require_dimension(int dimension) {
  if (dimension < 1 || dimension > kMaxDimension)
    throw InputError("dimension " + std::to_string(dimension) + " outside 1.." +
                     std::to_string(kMaxDimension));
}

void require_same_dimension(int a, int b, const char* what) {
  if (a != b)
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
}

// Sign for removing the p-th listed index (p 1-based).
inline double removal_sign(int p) {
#ifdef PLECTIC6_MUTATION_FLIP_CONTRACTION_SIGN
  return (p % 2 == 0) ? 1.0 : -1.0;
#else
  return (p % 2 == 1) ? 1.0 : -1.0;
#endif
}

}  // namespace

AlternatingForm::AlternatingForm(int dimension, int degree)
    : dimension_(dimension), degree_(degree) {
  require_dimension(dimension);
  if (degree < 0 || degree > dimension)
    throw InputError("form degree " + std::to_string(degree) + " outside 0.." + std::to_string(dimension));
  coefficients_.assign(binomial(dimension, degree), 0.0);
}

AlternatingForm::AlternatingForm(int dimension, int degree, std::vector<double> coefficients)
    : AlternatingForm(dimension, degree) {
  if (coefficients.size() != coefficients_.size())
    throw InputError("expected " + std::to_string(coefficients_.size()) + " coefficients, got " +
                     std::to_string(coefficients.size()));
  coefficients_ = std::move(coefficients);
}

AlternatingForm AlternatingForm::scalar(int dimension, double value) {
  return AlternatingForm(dimension, 0, {value});
}

double AlternatingForm::coefficient(const MultiIndex& index) const {
  if (index.size() != static_cast<std::size_t>(degree_) || !index.fits(dimension_))
    throw InputError("multi-index " + index.to_string() + " invalid for this form");
  return coefficient(index.mask());
}

double AlternatingForm::coefficient(IndexMask mask) const {
  return coefficients_[detail::lex_rank(mask, dimension_, degree_)];
}

AlternatingForm& AlternatingForm::add(const MultiIndex& index, double value) {
  if (index.size() != static_cast<std::size_t>(degree_) || !index.fits(dimension_))
    throw InputError("multi-index " + index.to_string() + " invalid for this form");
  return add(index.mask(), value);
}

AlternatingForm& AlternatingForm::add(IndexMask mask, double value) {
  coefficients_[detail::lex_rank(mask, dimension_, degree_)] += value;
  return *this;
}

double AlternatingForm::evaluate(std::span<const Vector> vectors) const {
  if (vectors.size() != static_cast<std::size_t>(degree_))
    throw InputError("evaluate: expected " + std::to_string(degree_) + " vectors");
  for (const Vector& v : vectors) require_same_dimension(dimension_, static_cast<int>(v.dimension()), "evaluate");
  if (degree_ == 0) return coefficients_.empty() ? 0.0 : coefficients_[0];

  const auto& masks = detail::subsets(dimension_, degree_);
  Matrix minor(degree_, degree_);
  double sum = 0.0;
  for (std::size_t pos = 0; pos < masks.size(); ++pos) {
    const double c = coefficients_[pos];
    if (c == 0.0) continue;
    IndexMask m = masks[pos];
    for (int r = 0; r < degree_; ++r) {
      const int i = __builtin_ctz(m);
      m &= m - 1;
      for (int col = 0; col < degree_; ++col) minor(r, col) = vectors[col][i];
    }
    sum += c * determinant(minor);
  }
  return sum;
}

double AlternatingForm::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coefficients_) m = std::max(m, std::abs(c));
  return m;
}

bool AlternatingForm::is_zero() const noexcept {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](double c) { return c == 0.0; });
}

std::string AlternatingForm::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

void AlternatingForm::require_same_shape(const AlternatingForm& other) const {
  require_same_dimension(dimension_, other.dimension_, "form arithmetic");
  if (degree_ != other.degree_) throw InputError("form arithmetic: degree mismatch");
}

AlternatingForm& AlternatingForm::operator+=(const AlternatingForm& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

AlternatingForm& AlternatingForm::operator-=(const AlternatingForm& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

AlternatingForm& AlternatingForm::operator*=(double c) {
  for (double& x : coefficients_) x *= c;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const AlternatingForm& a) {
  const auto& masks = detail::subsets(a.dimension(), a.degree());
  bool first = true;
  for (std::size_t pos = 0; pos < masks.size(); ++pos) {
    double c = a.coefficients()[pos];
    if (c == 0.0) continue;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = std::abs(c);
    } else if (c < 0) {
      os << '-';
      c = -c;
    }
    first = false;
    if (a.degree() == 0) {
      os << c;
      continue;
    }
    if (c != 1.0) os << c << '*';
    os << "dx^{" << MultiIndex::from_mask(masks[pos]).to_string() << '}';
  }
  if (first) os << '0';
  return os;
}

double max_abs_difference(const AlternatingForm& a, const AlternatingForm& b) {
  require_same_dimension(a.dimension(), b.dimension(), "compare");
  if (a.degree() != b.degree()) throw InputError("compare: degree mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a.coefficients()[i] - b.coefficients()[i]));
  return m;
}

bool approx_equal(const AlternatingForm& a, const AlternatingForm& b, double tol) {
  if (a.dimension() != b.dimension() || a.degree() != b.degree()) return false;
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return max_abs_difference(a, b) <= tol * scale;
}

AlternatingForm basis_form(int dimension, const MultiIndex& indices) {
  require_dimension(dimension);
  if (!indices.fits(dimension))
    throw InputError("multi-index " + indices.to_string() + " out of range for dimension " +
                     std::to_string(dimension));
  AlternatingForm out(dimension, static_cast<int>(indices.size()));
  out.add(indices, 1.0);
  return out;
}

AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b) {
  require_same_dimension(a.dimension(), b.dimension(), "wedge");
  const int n = a.dimension();
  const int degree = a.degree() + b.degree();
  if (degree > n) throw InputError("wedge: total degree exceeds the dimension");
  AlternatingForm out(n, degree);

  const auto& masks_a = detail::subsets(n, a.degree());
  const auto& masks_b = detail::subsets(n, b.degree());
  for (std::size_t i = 0; i < masks_a.size(); ++i) {
    const double ca = a.coefficients()[i];
    if (ca == 0.0) continue;
    for (std::size_t j = 0; j < masks_b.size(); ++j) {
      const double cb = b.coefficients()[j];
      if (cb == 0.0 || (masks_a[i] & masks_b[j]) != 0) continue;
      const double sign = (detail::merge_inversions(masks_a[i], masks_b[j]) % 2 == 0) ? 1.0 : -1.0;
      out.add(masks_a[i] | masks_b[j], sign * ca * cb);
    }
  }
  return out;
}

AlternatingForm contract(const Vector& v, const AlternatingForm& a) {
  require_same_dimension(a.dimension(), static_cast<int>(v.dimension()), "contract");
  if (a.degree() == 0) throw InputError("contract: cannot contract a degree-0 form");
  const int n = a.dimension();
  AlternatingForm out(n, a.degree() - 1);
  const auto& masks = detail::subsets(n, a.degree());
  for (std::size_t pos = 0; pos < masks.size(); ++pos) {
    const double c = a.coefficients()[pos];
    if (c == 0.0) continue;
    IndexMask rest = masks[pos];
    int p = 1;
    while (rest != 0) {
      const int i = __builtin_ctz(rest);
      rest &= rest - 1;
      const IndexMask bit = IndexMask{1} << i;
      if (v[i] != 0.0) out.add(masks[pos] & ~bit, removal_sign(p) * v[i] * c);
      ++p;
    }
  }
  return out;
}

AlternatingForm pullback(const LinearMap& g, const AlternatingForm& a) {
  require_same_dimension(a.dimension(), static_cast<int>(g.dimension()), "pullback");
  const int n = a.dimension();
  const int k = a.degree();
  if (k == 0) return a;
  AlternatingForm out(n, k);
  const auto& masks = detail::subsets(n, k);
  std::vector<Vector> images(n);
  for (int j = 0; j < n; ++j) images[j] = g.matrix().column(j);
  std::vector<Vector> args(k);
  for (std::size_t pos = 0; pos < masks.size(); ++pos) {
    IndexMask m = masks[pos];
    for (int r = 0; r < k; ++r) {
      args[r] = images[__builtin_ctz(m)];
      m &= m - 1;
    }
    out.add(masks[pos], a.evaluate(args));
  }
  return out;
}

Matrix flat_matrix(const AlternatingForm& a) {
  if (a.degree() == 0) throw InputError("flat_matrix: degree-0 form");
  const int n = a.dimension();
  Matrix m(binomial(n, a.degree() - 1), n);
  for (int j = 0; j < n; ++j) {
    const AlternatingForm column = contract(Vector::basis(n, j + 1), a);
    for (std::size_t r = 0; r < column.size(); ++r) m(r, j) = column.coefficients()[r];
  }
  return m;
}

bool is_nondegenerate(const AlternatingForm& a, double tol) {
  const Matrix flat = flat_matrix(a);
  const double scale = a.is_zero() ? 1.0 : a.max_abs();
  return rank(flat, tol * scale) == static_cast<std::size_t>(a.dimension());
}

}  // namespace plectic6
