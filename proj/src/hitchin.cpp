#include "plectic6/hitchin.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "plectic6/error.hpp"
#include "plectic6/random.hpp"

namespace plectic6 {

namespace {

constexpr int kDim = 6;

void require_three_form_in_six(const AlternatingForm& a, const AlternatingForm& omega) {
  if (a.dimension() != kDim || a.degree() != 3) throw InputError("expected a 3-form on a 6-dimensional space");
  if (omega.dimension() != kDim || omega.degree() != kDim) throw InputError("expected a volume form of degree 6");
  if (omega.is_zero()) throw InputError("volume form must be nonzero");
}

AlternatingForm three_form(std::initializer_list<std::pair<MultiIndex, double>> terms) {
  AlternatingForm a(kDim, 3);
  for (const auto& [index, c] : terms) a.add(index, c);
  return a;
}

// b(u,v,w) = (a(Ku,v,w) + a(u,Kv,w) + a(u,v,Kw)) / 3, which is alternating
// and equals a(Ku,v,w) whenever a(K.,.,.) already is.
AlternatingForm twist(const AlternatingForm& a, const Matrix& k) {
  AlternatingForm out(kDim, 3);
  std::array<Vector, kDim> e;
  for (int i = 0; i < kDim; ++i) e[i] = Vector::basis(kDim, i + 1);
  for (IndexMask mask : detail::subsets(kDim, 3)) {
    const MultiIndex idx = MultiIndex::from_mask(mask);
    std::array<Vector, 3> args{e[idx[0] - 1], e[idx[1] - 1], e[idx[2] - 1]};
    double sum = 0.0;
    for (int slot = 0; slot < 3; ++slot) {
      std::array<Vector, 3> twisted = args;
      twisted[slot] = k * args[slot];
      sum += a.evaluate(twisted);
    }
    out.add(mask, sum / 3.0);
  }
  return out;
}

struct Attempt {
  std::optional<LinearMap> map;
  double residual = std::numeric_limits<double>::infinity();
};

void consider(Attempt& best, const Matrix& g, const AlternatingForm& a, NormalFormTag tag) {
  const LinearMap map(g);
  if (!map.is_invertible(1e-300)) return;
  const double r = normalization_residual(map, a, tag);
  if (r < best.residual) {
    best.residual = r;
    best.map = map;
  }
}

// K^2 = +id: a restricts to nonzero top forms on both eigenspaces and has no
// mixed terms, so scaled eigenbases realize dx^{123} + dx^{456}.
void split_real(Attempt& best, const AlternatingForm& a, const Matrix& k, bool reverse) {
  const Matrix id = Matrix::identity(kDim);
  const double thr = 1e-8 * std::max(1.0, k.max_abs());
  std::vector<Vector> plus = null_space(k - id, thr);
  std::vector<Vector> minus = null_space(k + id, thr);
  if (plus.size() != 3 || minus.size() != 3) return;
  if (reverse) std::swap(plus[0], plus[1]), std::swap(minus[0], minus[1]);
  const double cp = a.evaluate(plus);
  const double cm = a.evaluate(minus);
  if (cp == 0.0 || cm == 0.0) return;
  plus[0] *= 1.0 / cp;
  minus[0] *= 1.0 / cm;
  Matrix g(kDim, kDim);
  for (std::size_t j = 0; j < 3; ++j) {
    g.set_column(j, plus[j]);
    g.set_column(j + 3, minus[j]);
  }
  consider(best, g, a, NormalFormTag::type_i);
}

// K^2 = -id: Psi = a + i a(K.,.,.) is a decomposable complex 3-form
// zeta1 ^ zeta2 ^ zeta3 with a = Re Psi. With zeta_k = theta^{2k-1} + i theta^{2k},
// the real coframe theta pulls back to the pattern of normal form (ii).
void split_complex(Attempt& best, const AlternatingForm& a, const Matrix& k, bool conjugate) {
  using cplx = std::complex<double>;
  const AlternatingForm im = twist(a, k);

  // Factor through the largest coefficient: with x,y,z = e_i,e_j,e_k and
  // c = Psi(x,y,z), Psi = phi1 ^ phi2 ^ phi3 / c^2 where phi1 = Psi(., y, z) etc.
  const auto& masks = detail::subsets(kDim, 3);
  std::size_t best_pos = 0;
  double best_mod = -1.0;
  for (std::size_t pos = 0; pos < masks.size(); ++pos) {
    const double m = std::norm(cplx(a.coefficients()[pos], im.coefficients()[pos]));
    if (m > best_mod) best_mod = m, best_pos = pos;
  }
  if (!(best_mod > 0.0)) return;
  const MultiIndex pivot = MultiIndex::from_mask(masks[best_pos]);
  const cplx c(a.coefficients()[best_pos], im.coefficients()[best_pos]);

  std::array<std::array<cplx, kDim>, 3> zeta{};
  for (int slot = 0; slot < 3; ++slot) {
    for (int m = 0; m < kDim; ++m) {
      std::array<Vector, 3> args{Vector::basis(kDim, pivot[0]), Vector::basis(kDim, pivot[1]),
                                 Vector::basis(kDim, pivot[2])};
      args[slot] = Vector::basis(kDim, m + 1);
      zeta[slot][m] = cplx(a.evaluate(args), im.evaluate(args));
    }
  }
  for (cplx& z : zeta[0]) z /= c * c;
  if (conjugate)
    for (auto& row : zeta)
      for (cplx& z : row) z = std::conj(z);

  Matrix coframe(kDim, kDim);
  for (int s = 0; s < 3; ++s)
    for (int m = 0; m < kDim; ++m) {
      coframe(2 * s, m) = zeta[s][m].real();
      coframe(2 * s + 1, m) = zeta[s][m].imag();
    }
  Matrix g;
  try {
    g = inverse(coframe);
  } catch (const InputError&) {
    return;
  }
  consider(best, g, a, NormalFormTag::type_ii);
}

}  // namespace

std::string_view to_string(TypeTag tag) {
  switch (tag) {
    case TypeTag::type_i: return "type_i";
    case TypeTag::type_ii: return "type_ii";
    case TypeTag::type_iii: return "type_iii";
    case TypeTag::degenerate: return "degenerate";
  }
  return "degenerate";
}

std::string_view to_string(NormalFormTag tag) { return to_string(to_type_tag(tag)); }

std::optional<TypeTag> parse_type_tag(std::string_view text) {
  for (TypeTag t : {TypeTag::type_i, TypeTag::type_ii, TypeTag::type_iii, TypeTag::degenerate})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

std::optional<NormalFormTag> parse_normal_form_tag(std::string_view text) {
  for (NormalFormTag t : {NormalFormTag::type_i, NormalFormTag::type_ii, NormalFormTag::type_iii})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

TypeTag to_type_tag(NormalFormTag tag) {
  switch (tag) {
    case NormalFormTag::type_i: return TypeTag::type_i;
    case NormalFormTag::type_ii: return TypeTag::type_ii;
    case NormalFormTag::type_iii: return TypeTag::type_iii;
  }
  return TypeTag::degenerate;
}

AlternatingForm standard_volume() { return basis_form(kDim, {1, 2, 3, 4, 5, 6}); }

AlternatingForm family_form(double t) {
  return three_form({{{1, 3, 5}, 1.0}, {{1, 4, 6}, -1.0}, {{2, 3, 6}, -1.0}, {{2, 4, 5}, t}});
}

AlternatingForm HitchinEndo::image(const Vector& v) const { return contract(endo * v, volume); }

Vector volume_coordinates(const AlternatingForm& b, const AlternatingForm& omega) {
  const int n = omega.dimension();
  if (omega.degree() != n) throw InputError("volume_coordinates: omega must be a top-degree form");
  if (b.dimension() != n || b.degree() != n - 1)
    throw InputError("volume_coordinates: expected a form of degree n-1");
  if (omega.is_zero()) throw InputError("volume_coordinates: zero volume form");
  const IndexMask all = (IndexMask{1} << n) - 1;
  Vector v(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const IndexMask rest = all & ~(IndexMask{1} << j);
    const double unit = contract(Vector::basis(n, j + 1), omega).coefficient(rest);
    v[j] = b.coefficient(rest) / unit;
  }
  return v;
}

HitchinEndo build_J(const AlternatingForm& a, const AlternatingForm& omega) {
  require_three_form_in_six(a, omega);
  HitchinEndo j{Matrix(kDim, kDim), omega};
  for (int col = 0; col < kDim; ++col) {
    const AlternatingForm image = wedge(contract(Vector::basis(kDim, col + 1), a), a);
    j.endo.set_column(col, volume_coordinates(image, omega));
  }
  return j;
}

double lambda(const AlternatingForm& a, const AlternatingForm& omega) {
  const Matrix& endo = build_J(a, omega).endo;
  return (endo * endo).trace();
}

Classification classify(const AlternatingForm& a, const AlternatingForm& omega, double tol) {
  Classification c;
  c.lambda = lambda(a, omega);
  const double scale = a.max_abs();
  const double volume_scale = omega.max_abs();
  c.tolerance_used = tol * std::pow(scale, 4) / (volume_scale * volume_scale);
  if (!is_nondegenerate(a, tol)) {
    c.type_tag = TypeTag::degenerate;
  } else if (c.lambda > c.tolerance_used) {
    c.type_tag = TypeTag::type_i;
  } else if (c.lambda < -c.tolerance_used) {
    c.type_tag = TypeTag::type_ii;
  } else {
    c.type_tag = TypeTag::type_iii;
  }
  return c;
}

AlternatingForm normal_form(NormalFormTag tag) {
  switch (tag) {
    case NormalFormTag::type_i:
      return three_form({{{1, 2, 3}, 1.0}, {{4, 5, 6}, 1.0}});
    case NormalFormTag::type_ii:
      return three_form({{{1, 3, 5}, 1.0}, {{1, 4, 6}, -1.0}, {{2, 3, 6}, -1.0}, {{2, 4, 5}, -1.0}});
    case NormalFormTag::type_iii:
      return three_form({{{1, 5, 6}, 1.0}, {{2, 4, 6}, -1.0}, {{3, 4, 5}, 1.0}});
  }
  throw InputError("unknown normal form tag");
}

double normalization_residual(const LinearMap& g, const AlternatingForm& a, NormalFormTag tag) {
  return max_abs_difference(pullback(g, a), normal_form(tag));
}

LinearMap normalize(const AlternatingForm& a, const AlternatingForm& omega, double tol) {
  const Classification c = classify(a, omega, tol);
  if (c.type_tag == TypeTag::type_iii) throw UnsupportedError("type (iii) normalization unsupported");
  if (c.type_tag == TypeTag::degenerate) throw UnsupportedError("degenerate form cannot be normalized");

  const Matrix endo = build_J(a, omega).endo;
  const Matrix k = (1.0 / std::sqrt(std::abs(c.lambda) / 6.0)) * endo;
  Attempt best;
  // At most four branches: K or -K, and two orientations of the chosen bases.
  for (double sign : {1.0, -1.0}) {
    for (bool flip : {false, true}) {
      if (c.type_tag == TypeTag::type_i) {
        split_real(best, a, sign * k, flip);
      } else {
        split_complex(best, a, sign * k, flip);
      }
      if (best.residual <= tol) return *best.map;
    }
  }
  throw NormalizationFailed("normalization failed: best residual " + std::to_string(best.residual) +
                                " exceeds tolerance",
                            best.residual);
}

AlternatingForm random_orbit_sample(NormalFormTag tag, std::uint64_t seed) {
  Rng rng(seed);
  return pullback(random_invertible(rng, kDim, 0.1), normal_form(tag));
}

}  // namespace plectic6
