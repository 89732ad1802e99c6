#pragma once

#include <cstdint>
#include <random>

#include "plectic6/alternating_form.hpp"
#include "plectic6/linear_algebra.hpp"

namespace plectic6 {

// Seeded generator. Doubles are built from raw 64-bit draws so sequences are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

Vector random_vector(Rng& rng, int dimension);
// Coefficients uniform in [-1, 1].
AlternatingForm random_form(Rng& rng, int dimension, int degree);
// Entries uniform in [-1, 1], resampled until |det| > min_abs_det.
LinearMap random_invertible(Rng& rng, int dimension, double min_abs_det = 0.1);

}  // namespace plectic6
