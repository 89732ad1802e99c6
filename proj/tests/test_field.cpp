#include <gtest/gtest.h>

#include <cmath>

#include "plectic6/error.hpp"
#include "plectic6/field.hpp"
#include "plectic6/random.hpp"

using namespace plectic6;

namespace {

FormField omega_f(const char* f, bool periodic = false) {
  return FormField{OmegaF{parse_expr(f)}, periodic};
}

FormField general(const std::array<const char*, 20>& exprs) {
  GeneralField g;
  for (std::size_t i = 0; i < exprs.size(); ++i) g.coefficients[i] = parse_expr(exprs[i]);
  return FormField{g, false};
}

std::size_t slot(int i, int j, int k) { return detail::lex_rank(MultiIndex{i, j, k}.mask(), 6, 3); }

Point6 random_point(Rng& rng, double lo = -2.0, double hi = 2.0) {
  Point6 p{};
  for (double& x : p) x = rng.uniform(lo, hi);
  return p;
}

std::vector<TypeTag> tags_of(const ScanReport& r) {
  std::vector<TypeTag> out;
  for (const auto& p : r.points) out.push_back(p.tag);
  return out;
}

}  // namespace

TEST(GridSpec, ParsesFrozenAndRangedAxes) {
  const GridSpec g = parse_grid("0,-1:1:0.25,0,0,0,0");
  EXPECT_EQ(g.axes[1].count(), 9u);
  EXPECT_EQ(g.axes[0].count(), 1u);
  EXPECT_EQ(g.point_count(), 9u);
  EXPECT_EQ(g.axes[1].value(8), 1.0);
  EXPECT_EQ(parse_grid("0,0:0.75:0.25,0,0,0,0").axes[1].count(), 4u);
  EXPECT_EQ(parse_grid("1,2:2:0.5,3,4,5,6").point_count(), 1u);
  EXPECT_EQ(parse_grid("0,0:1:0.1,0,0,0,0").axes[1].count(), 11u);
}

TEST(GridSpec, Errors) {
  EXPECT_THROW(parse_grid("0,0,0,0,0"), InputError);
  EXPECT_THROW(parse_grid("0,0,0,0,0,0,0"), InputError);
  EXPECT_THROW(parse_grid("0,1:0:0.1,0,0,0,0"), InputError);
  EXPECT_THROW(parse_grid("0,0:1:0,0,0,0,0"), InputError);
  EXPECT_THROW(parse_grid("0,0:1:-1,0,0,0,0"), InputError);
  EXPECT_THROW(parse_grid("0,a,0,0,0,0"), InputError);
  EXPECT_THROW(parse_grid("0,0:1,0,0,0,0"), InputError);
}

TEST(FieldSpec, OmegaF) {
  const FormField f = parse_field_spec("  omega_f: sin(2*pi*x2) ", true);
  ASSERT_TRUE(f.is_omega_f());
  EXPECT_TRUE(f.periodic);
  EXPECT_EQ(std::get<OmegaF>(f.source).f.text(), "sin(2*pi*x2)");
  EXPECT_THROW(parse_field_spec("omega: x2"), ParseError);
  EXPECT_THROW(parse_field_spec("omega_f: x2 +"), ParseError);
}

TEST(FieldSpec, General) {
  std::string spec = "general:\n";
  for (IndexMask m : detail::subsets(6, 3)) {
    const MultiIndex idx = MultiIndex::from_mask(m);
    spec += std::to_string(idx[0]) + " " + std::to_string(idx[1]) + " " + std::to_string(idx[2]) + " ";
    spec += idx == MultiIndex{1, 3, 5} ? "x1 + 1\n" : "0\n";
  }
  const FormField f = parse_field_spec(spec);
  ASSERT_FALSE(f.is_omega_f());
  EXPECT_EQ(eval_field(f, {2, 0, 0, 0, 0, 0}), 3.0 * basis_form(6, {1, 3, 5}));

  std::string semicolons = "general: 1 2 3 1";
  for (IndexMask m : detail::subsets(6, 3)) {
    const MultiIndex idx = MultiIndex::from_mask(m);
    if (idx == MultiIndex{1, 2, 3}) continue;
    semicolons += "; " + std::to_string(idx[0]) + " " + std::to_string(idx[1]) + " " + std::to_string(idx[2]) + " 0";
  }
  EXPECT_EQ(eval_field(parse_field_spec(semicolons), {}), basis_form(6, {1, 2, 3}));

  EXPECT_THROW(parse_field_spec("general:\n1 2 3 x1\n"), ParseError);                  // too few
  EXPECT_THROW(parse_field_spec("general:\n1 2 3 x1\n1 2 3 x2\n"), ParseError);        // repeated
  EXPECT_THROW(parse_field_spec("general:\n3 2 1 x1\n"), ParseError);                  // unsorted
  EXPECT_THROW(parse_field_spec("general:\n1 2 3 x1 +\n"), ParseError);                // bad expr
}

TEST(EvalField, Examples) {
  const FormField f = omega_f("x2");
  EXPECT_EQ(eval_field(f, {}), family_form(0.0));
  EXPECT_EQ(eval_field(f, {0, 1, 0, 0, 0, 0}), family_form(1.0));
  std::array<const char*, 20> zeros;
  zeros.fill("0");
  EXPECT_TRUE(eval_field(general(zeros), {1, 2, 3, 4, 5, 6}).is_zero());
}

TEST(EvalField, PeriodicReduction) {
  const FormField f = omega_f("x2", true);
  EXPECT_EQ(eval_field(f, {0, 1.25, 0, 0, 0, 0}), family_form(0.25));
  EXPECT_EQ(eval_field(f, {0, -0.75, 0, 0, 0, 0}), family_form(0.25));
}

TEST(EvalField, ErrorsNameThePoint) {
  try {
    eval_field(omega_f("1/x3"), {0, 0, 0, 0, 0, 0});
    FAIL();
  } catch (const EvalError& e) {
    EXPECT_NE(std::string(e.what()).find("at point (0, 0, 0, 0, 0, 0)"), std::string::npos);
  }
}

TEST(Closedness, SymbolicCriterion) {
  EXPECT_TRUE(is_closed_omega_f(omega_f("x2")));
  EXPECT_FALSE(is_closed_omega_f(omega_f("x1")));
  EXPECT_TRUE(is_closed_omega_f(omega_f("sin(2*pi*x2)")));
  EXPECT_TRUE(is_closed_omega_f(omega_f("x2*x4 - x5")));
  EXPECT_TRUE(is_closed_omega_f(omega_f("3")));
  EXPECT_FALSE(is_closed_omega_f(omega_f("x1*0")));
  std::array<const char*, 20> zeros;
  zeros.fill("0");
  EXPECT_THROW(is_closed_omega_f(general(zeros)), UnsupportedError);
}

TEST(ExteriorDerivativeFd, Examples) {
  Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    const Point6 p = random_point(rng);
    EXPECT_LE(exterior_derivative_fd(omega_f("x2"), p, 1e-4).max_abs(), 1e-6);
    const AlternatingForm d = exterior_derivative_fd(omega_f("x1"), p, 1e-4);
    // d(x1 dx^{245}) = dx^1 ^ dx^{245} = +dx^{1245}
    EXPECT_NEAR(d.coefficient(MultiIndex{1, 2, 4, 5}), 1.0, 1e-6);
    EXPECT_LE(max_abs_difference(d, basis_form(6, {1, 2, 4, 5})), 1e-6);
  }
  std::array<const char*, 20> constants;
  constants.fill("0.5");
  EXPECT_TRUE(exterior_derivative_fd(general(constants), {1, 2, 3, 4, 5, 6}).is_zero());
  EXPECT_THROW(exterior_derivative_fd(omega_f("x2"), {}, 0.0), InputError);
}

TEST(ExteriorDerivativeFd, SecondOrderConvergence) {
  // omega = d(sin(x1) x3 dx^{45}) = cos(x1) x3 dx^{145} + sin(x1) dx^{345}, which is closed;
  // the central difference leaves -cos(x1) h^2 / 6 on dx^{1345}.
  std::array<const char*, 20> exprs;
  exprs.fill("0");
  exprs[slot(1, 4, 5)] = "cos(x1)*x3";
  exprs[slot(3, 4, 5)] = "sin(x1)";
  const FormField field = general(exprs);
  const Point6 p{0.3, -0.2, 1.1, 0.4, 0.9, -0.6};
  std::vector<double> norms;
  for (double h : {1e-2, 1e-3, 1e-4}) norms.push_back(exterior_derivative_fd(field, p, h).max_abs());
  for (std::size_t i = 0; i + 1 < norms.size(); ++i) {
    if (norms[i + 1] < 1e-11) continue;  // round-off floor
    EXPECT_NEAR(norms[i] / norms[i + 1], 100.0, 20.0) << i;
  }
  EXPECT_NEAR(norms[0], std::cos(0.3) * 1e-4 / 6.0, 1e-8);
}

TEST(FieldProperties, LambdaIsTwentyFourF) {
  Rng rng(43);
  const std::array<const char*, 5> fs{"x2", "sin(x2)*x4 - x5", "exp(x4) - 2", "x1*x3 + x6^3", "cos(3*x5)/(2 + x2^2)"};
  for (const char* text : fs) {
    const FormField field = omega_f(text);
    const ScalarFieldExpr f = parse_expr(text);
    for (int i = 0; i < 40; ++i) {
      const Point6 p = random_point(rng);
      const AlternatingForm form = eval_field(field, p);
      const double want = 24.0 * f.evaluate(p);
      EXPECT_NEAR(lambda(form, standard_volume()), want, 1e-9 * std::max(1.0, std::abs(want)));
      EXPECT_TRUE(is_nondegenerate(form)) << text;
      const Classification c = classify(form, standard_volume());
      const TypeTag expected = want > c.tolerance_used    ? TypeTag::type_i
                               : want < -c.tolerance_used ? TypeTag::type_ii
                                                          : TypeTag::type_iii;
      EXPECT_EQ(c.type_tag, expected);
    }
  }
}

TEST(Scan, ThreePointExample) {
  const ScanReport r = scan(omega_f("x2"), parse_grid("0,-1:1:1,0,0,0,0"));
  ASSERT_EQ(r.points.size(), 3u);
  EXPECT_EQ(tags_of(r), (std::vector<TypeTag>{TypeTag::type_ii, TypeTag::type_iii, TypeTag::type_i}));
  EXPECT_NEAR(r.points[0].lambda, -24.0, 1e-12);
  EXPECT_EQ(r.points[1].lambda, 0.0);
  EXPECT_NEAR(r.points[2].lambda, 24.0, 1e-12);
  EXPECT_EQ(r.boundary_cells, (std::vector<BoundaryCell>{{0, 1, 1}, {1, 2, 1}}));
}

TEST(Scan, ConstantZeroIsTypeThreeEverywhere) {
  const ScanReport r = scan(omega_f("0"), parse_grid("-1:1:1,-1:1:1,0,0:1:0.5,0,0"));
  EXPECT_EQ(r.points.size(), 27u);
  for (const auto& p : r.points) EXPECT_EQ(p.tag, TypeTag::type_iii);
  EXPECT_TRUE(r.boundary_cells.empty());
}

TEST(Scan, TorusExample) {
  const ScanReport r = scan(omega_f("sin(2*pi*x2)", true), parse_grid("0,0:0.75:0.25,0,0,0,0"));
  EXPECT_EQ(tags_of(r),
            (std::vector<TypeTag>{TypeTag::type_iii, TypeTag::type_i, TypeTag::type_iii, TypeTag::type_ii}));
  // Wrap-around joins the last point to the first.
  EXPECT_EQ(r.boundary_cells.size(), 4u);
  EXPECT_EQ(r.boundary_cells.back(), (BoundaryCell{3, 0, 1}));
}

TEST(Scan, PointOrderIsLexicographic) {
  const ScanReport r = scan(omega_f("x2"), parse_grid("0:1:1,0:2:1,0,0,0,0"));
  ASSERT_EQ(r.points.size(), 6u);
  EXPECT_EQ(r.points[1].coordinates[1], 1.0);
  EXPECT_EQ(r.points[3].coordinates[0], 1.0);
  EXPECT_EQ(r.points[3].coordinates[1], 0.0);
}

TEST(Scan, DeterministicAcrossWorkerCounts) {
  const FormField field = omega_f("sin(3*x2)*x4 - x5/2");
  const GridSpec grid = parse_grid("0,-1:1:0.1,0,-1:1:0.25,-1:1:0.5,0");
  ScanOptions one;
  one.workers = 1;
  ScanOptions many;
  many.workers = 7;
  const ScanReport a = scan(field, grid, one);
  const ScanReport b = scan(field, grid, many);
  ASSERT_EQ(a.points.size(), b.points.size());
  ASSERT_GT(a.points.size(), 256u);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].coordinates, b.points[i].coordinates);
    EXPECT_EQ(a.points[i].lambda, b.points[i].lambda);
    EXPECT_EQ(a.points[i].tag, b.points[i].tag);
  }
  EXPECT_EQ(a.boundary_cells, b.boundary_cells);
}

TEST(Scan, RecordsMatchReclassification) {
  const FormField field = omega_f("x2*x4 - x5");
  const ScanReport r = scan(field, parse_grid("0,-1:1:0.5,0,-1:1:0.5,-1:1:0.5,0"));
  for (const auto& p : r.points) {
    const Classification c = classify(eval_field(field, p.coordinates), standard_volume());
    EXPECT_EQ(c.type_tag, p.tag);
    EXPECT_EQ(c.lambda, p.lambda);
  }
}

TEST(Scan, BoundaryCellsAreExactlyTheDifferingNeighbours) {
  const ScanReport r = scan(omega_f("x2*x4"), parse_grid("0,-1:1:0.5,0,-1:1:1,0,0"));
  const auto shape = r.grid.shape();
  std::vector<BoundaryCell> expected;
  for (std::size_t i = 0; i < shape[1]; ++i)
    for (std::size_t j = 0; j < shape[3]; ++j) {
      const std::size_t here = i * shape[3] + j;
      if (i + 1 < shape[1] && r.points[here].tag != r.points[here + shape[3]].tag)
        expected.push_back({here, here + shape[3], 1});
      if (j + 1 < shape[3] && r.points[here].tag != r.points[here + 1].tag) expected.push_back({here, here + 1, 3});
    }
  EXPECT_EQ(r.boundary_cells, expected);
  EXPECT_FALSE(expected.empty());
}

TEST(Scan, DegeneratePointsAreRecorded) {
  std::array<const char*, 20> exprs;
  exprs.fill("0");
  exprs[slot(1, 2, 3)] = "x1";
  const ScanReport r = scan(general(exprs), parse_grid("0:1:1,0,0,0,0,0"));
  EXPECT_EQ(tags_of(r), (std::vector<TypeTag>{TypeTag::degenerate, TypeTag::degenerate}));
}

TEST(Scan, CapAndErrors) {
  ScanOptions small;
  small.cap = 10;
  EXPECT_THROW(scan(omega_f("x2"), parse_grid("0,0:1:0.01,0,0,0,0"), small), InputError);
  EXPECT_THROW(scan(omega_f("1/x2"), parse_grid("0,-1:1:1,0,0,0,0")), EvalError);
}

TEST(Obstruction, OriginOfLinearField) {
  const ScanReport r = scan(omega_f("x2"), parse_grid("0,-1:1:0.25,0,0,0,0"));
  const ObstructionVerdict v = detect_obstruction(r, {});
  EXPECT_TRUE(v.obstruction);
  EXPECT_EQ(v.base_tag, TypeTag::type_iii);
  EXPECT_EQ(v.radii.size(), 4u);
  EXPECT_EQ(v.radii[0].distinct_tags, 3u);
  EXPECT_EQ(v.resolution, 0.25);
  EXPECT_NE(v.summary.find("witnessed at resolution"), std::string::npos);
  EXPECT_EQ(v.summary.find("prove"), std::string::npos);
}

TEST(Obstruction, ConstantFieldHasNone) {
  const ScanReport r = scan(omega_f("1"), parse_grid("-1:1:0.5,-1:1:0.5,0,0,0,0"));
  for (const auto& p : r.points) {
    const ObstructionVerdict v = detect_obstruction(r, p.coordinates);
    EXPECT_FALSE(v.obstruction);
    for (const auto& w : v.radii) EXPECT_EQ(w.distinct_tags, 1u);
  }
}

TEST(Obstruction, SubgridAwayFromZero) {
  const ScanReport r = scan(omega_f("x2"), parse_grid("0,0.5:1.5:0.25,0,0,0,0"));
  EXPECT_FALSE(detect_obstruction(r, {0, 1, 0, 0, 0, 0}).obstruction);
}

TEST(Obstruction, PositiveSideOnlyAtLargerRadius) {
  // Base at x2 = 1: radius 1 holds only type_i, so no obstruction.
  const ScanReport r = scan(omega_f("x2"), parse_grid("0,-1:1:0.5,0,0,0,0"));
  const ObstructionVerdict v = detect_obstruction(r, {0, 1, 0, 0, 0, 0});
  EXPECT_FALSE(v.obstruction);
  EXPECT_FALSE(v.radii.front().mixed);
  EXPECT_TRUE(v.radii.back().mixed);
}

TEST(Obstruction, BaseOffGrid) {
  const ScanReport r = scan(omega_f("x2"), parse_grid("0,-1:1:1,0,0,0,0"));
  EXPECT_THROW(detect_obstruction(r, {0, 0.5, 0, 0, 0, 0}), InputError);
  EXPECT_THROW(detect_obstruction(r, {1, 0, 0, 0, 0, 0}), InputError);
}

TEST(Obstruction, SinglePointGrid) {
  const ScanReport r = scan(omega_f("x2"), parse_grid("0,0,0,0,0,0"));
  const ObstructionVerdict v = detect_obstruction(r, {});
  EXPECT_FALSE(v.obstruction);
  EXPECT_TRUE(v.radii.empty());
}
