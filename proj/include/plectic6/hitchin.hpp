#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "plectic6/alternating_form.hpp"
#include "plectic6/linear_algebra.hpp"

namespace plectic6 {

enum class TypeTag { type_i, type_ii, type_iii, degenerate };
enum class NormalFormTag { type_i, type_ii, type_iii };

std::string_view to_string(TypeTag tag);
std::string_view to_string(NormalFormTag tag);
std::optional<TypeTag> parse_type_tag(std::string_view text);
std::optional<NormalFormTag> parse_normal_form_tag(std::string_view text);
TypeTag to_type_tag(NormalFormTag tag);

inline constexpr double kDefaultClassifyTolerance = 1e-9;

// dx^1 ^ ... ^ dx^6.
AlternatingForm standard_volume();

// dx^{135} - dx^{146} - dx^{236} + t dx^{245}: non-degenerate for every t,
// with lambda = 24 t relative to the standard volume.
AlternatingForm family_form(double t);

// J_a = A (x) Omega, where J_a(v) = (i_v a) ^ a in degree 5 is identified with
// the vector w satisfying i_w Omega = J_a(v).
struct HitchinEndo {
  Matrix endo;
  AlternatingForm volume;

  // i_{A v} Omega, which equals (i_v a) ^ a.
  AlternatingForm image(const Vector& v) const;
};

struct Classification {
  double lambda = 0.0;
  TypeTag type_tag = TypeTag::degenerate;
  // Absolute band |lambda| <= tolerance_used that was declared type (iii).
  double tolerance_used = 0.0;
};

// The unique v with i_v omega = b, for b of degree n-1 and omega of degree n.
Vector volume_coordinates(const AlternatingForm& b, const AlternatingForm& omega);

HitchinEndo build_J(const AlternatingForm& a, const AlternatingForm& omega);

// trace(A^2) relative to omega.
double lambda(const AlternatingForm& a, const AlternatingForm& omega);

// Degenerate when is_nondegenerate fails; otherwise by the sign of lambda
// against tol * max|a|^4 / max|omega|^2.
Classification classify(const AlternatingForm& a, const AlternatingForm& omega,
                        double tol = kDefaultClassifyTolerance);

// The three representatives, coefficient for coefficient:
//   (i)   dx^{123} + dx^{456}
//   (ii)  dx^{135} - dx^{146} - dx^{236} - dx^{245}
//   (iii) dx^{156} - dx^{246} + dx^{345}
AlternatingForm normal_form(NormalFormTag tag);

// Returns g with max|g^* a - normal_form(tag)| <= tol for forms of type (i)
// or (ii). Throws UnsupportedError for type (iii) or degenerate input and
// NormalizationFailed if no branch meets the residual bound.
LinearMap normalize(const AlternatingForm& a, const AlternatingForm& omega, double tol = 1e-9);

double normalization_residual(const LinearMap& g, const AlternatingForm& a, NormalFormTag tag);

// pullback(g, normal_form(tag)) for a seeded random g with |det g| > 0.1.
AlternatingForm random_orbit_sample(NormalFormTag tag, std::uint64_t seed);

}  // namespace plectic6
