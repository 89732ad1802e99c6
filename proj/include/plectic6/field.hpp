#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plectic6/alternating_form.hpp"
#include "plectic6/expr.hpp"
#include "plectic6/hitchin.hpp"

namespace plectic6 {

// dx^{135} - dx^{146} - dx^{236} + f(x) dx^{245}.
struct OmegaF {
  ScalarFieldExpr f;
};

// One coefficient expression per degree-3 multi-index of R^6, in
// lexicographic order (123, 124, ..., 456).
struct GeneralField {
  std::array<ScalarFieldExpr, 20> coefficients;
};

struct FormField {
  std::variant<OmegaF, GeneralField> source;
  // Evaluate on the fundamental domain [0,1)^6 of the torus R^6 / Z^6.
  bool periodic = false;

  bool is_omega_f() const noexcept { return std::holds_alternative<OmegaF>(source); }
};

// Field spec mini-language: "omega_f: <expr>", or "general:" followed by 20
// lines "<i> <j> <k> <expr>" (newline or ';' separated).
FormField parse_field_spec(std::string_view text, bool periodic = false);

struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;  // 0 for a frozen axis

  std::size_t count() const;
  double value(std::size_t i) const { return min + static_cast<double>(i) * step; }
};

struct GridSpec {
  std::array<GridAxis, 6> axes;

  // Saturates at SIZE_MAX instead of overflowing.
  std::size_t point_count() const;
  std::array<std::size_t, 6> shape() const;
};

inline constexpr std::size_t kDefaultGridCap = 1'000'000;

// "0,-1:1:0.25,0,0,0,0": six comma-separated axes, each a frozen value or
// min:max:step.
GridSpec parse_grid(std::string_view text);

// Throws EvalError naming the point when an expression fails.
AlternatingForm eval_field(const FormField& field, const Point6& p);

// Sufficient closedness criterion for omega_f: f depends only on x2, x4, x5.
// Throws UnsupportedError for general fields.
bool is_closed_omega_f(const FormField& field);

inline constexpr double kDefaultFdStep = 1e-4;
inline constexpr double kClosednessTolerance = 1e-6;

// Central-difference approximation of d(omega) at p, a 4-form.
AlternatingForm exterior_derivative_fd(const FormField& field, const Point6& p, double h = kDefaultFdStep);

struct PointRecord {
  Point6 coordinates{};
  double lambda = 0.0;
  TypeTag tag = TypeTag::degenerate;
};

// Adjacent grid points (one step along `axis`, wrapping when periodic) whose
// tags differ. Indices refer to ScanReport::points.
struct BoundaryCell {
  std::size_t first = 0;
  std::size_t second = 0;
  int axis = 0;

  friend bool operator==(const BoundaryCell&, const BoundaryCell&) = default;
};

struct RadiusWitness {
  std::size_t radius = 0;
  std::size_t distinct_tags = 0;
  bool mixed = false;
};

struct ObstructionVerdict {
  Point6 base{};
  std::size_t base_index = 0;
  TypeTag base_tag = TypeTag::degenerate;
  std::vector<RadiusWitness> radii;
  bool obstruction = false;
  double resolution = 0.0;  // smallest grid step among moving axes
  std::string summary;
};

struct ScanReport {
  GridSpec grid;
  bool periodic = false;
  double tolerance = kDefaultClassifyTolerance;
  std::vector<PointRecord> points;  // lexicographic in grid indices, axis 1 slowest
  std::vector<BoundaryCell> boundary_cells;
  std::optional<ObstructionVerdict> obstruction;
};

struct ScanOptions {
  double tol = kDefaultClassifyTolerance;
  std::size_t cap = kDefaultGridCap;
  unsigned workers = 0;  // 0: hardware concurrency
};

// Classifies every grid point against the standard volume. Degenerate points
// are recorded, not errors. Output is identical for any worker count.
ScanReport scan(const FormField& field, const GridSpec& grid, const ScanOptions& options = {});

// For each Chebyshev radius r >= 1 (in grid steps) around `base`, whether the
// closed ball holds at least two tags. Obstruction holds iff every radius
// does. Throws InputError if base is not a grid point.
ObstructionVerdict detect_obstruction(const ScanReport& report, const Point6& base);

// Grid index of p, if p lies on the grid.
std::optional<std::size_t> locate_on_grid(const GridSpec& grid, const Point6& p);

}  // namespace plectic6
