#include "plectic6/random.hpp"

#include <cmath>

namespace plectic6 {

Vector random_vector(Rng& rng, int dimension) {
  Vector v(static_cast<std::size_t>(dimension));
  for (int i = 0; i < dimension; ++i) v[i] = rng.uniform(-1.0, 1.0);
  return v;
}

AlternatingForm random_form(Rng& rng, int dimension, int degree) {
  AlternatingForm a(dimension, degree);
  std::vector<double> c(a.size());
  for (double& x : c) x = rng.uniform(-1.0, 1.0);
  return AlternatingForm(dimension, degree, std::move(c));
}

LinearMap random_invertible(Rng& rng, int dimension, double min_abs_det) {
  const auto n = static_cast<std::size_t>(dimension);
  while (true) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.uniform(-1.0, 1.0);
    if (std::abs(determinant(m)) > min_abs_det) return LinearMap(std::move(m));
  }
}

}  // namespace plectic6
