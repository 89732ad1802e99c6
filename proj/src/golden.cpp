#include "plectic6/golden.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace plectic6 {

namespace {

struct Term {
  int i, j;
  double coefficient;
};

// i_{e_j} alpha^t, j = 1..6, as printed for the family.
std::array<std::vector<Term>, 6> expected_contractions(double t) {
  return {{
      {{3, 5, 1.0}, {4, 6, -1.0}},
      {{3, 6, -1.0}, {4, 5, t}},
      {{1, 5, -1.0}, {2, 6, 1.0}},
      {{1, 6, 1.0}, {2, 5, -t}},
      {{1, 3, 1.0}, {2, 4, t}},
      {{1, 4, -1.0}, {2, 3, -1.0}},
  }};
}

// Printed 6x6 matrix of J_{alpha^t} relative to dvol, row by row.
Matrix expected_j_matrix(double t) {
  return Matrix(6, 6, {0, -2 * t, 0, 0, 0, 0,
                       -2, 0, 0, 0, 0, 0,
                       0, 0, 0, -2 * t, 0, 0,
                       0, 0, -2, 0, 0, 0,
                       0, 0, 0, 0, 0, 2,
                       0, 0, 0, 0, 2 * t, 0});
}

std::string num(double x) { return format_number(x); }

VerifyItem check_contractions(double t) {
  VerifyItem item{"contractions of alpha^t, t=" + num(t), true, ""};
  const AlternatingForm a = family_form(t);
  const auto expected = expected_contractions(t);
  for (int j = 0; j < 6; ++j) {
    AlternatingForm want(6, 2);
    for (const Term& term : expected[j]) want.add(MultiIndex{term.i, term.j}, term.coefficient);
    const AlternatingForm got = contract(Vector::basis(6, j + 1), a);
    if (!(got == want)) {
      item.pass = false;
      item.detail += "i_e" + std::to_string(j + 1) + " a = " + got.to_string() + ", expected " + want.to_string() + "; ";
    }
  }
  return item;
}

VerifyItem check_j_matrix(double t) {
  VerifyItem item{"J matrix of alpha^t, t=" + num(t), true, ""};
  const Matrix a = build_J(family_form(t), standard_volume()).endo;
  const double diff = (a - expected_j_matrix(t)).max_abs();
  const double square_diff = (a * a - (4.0 * t) * Matrix::identity(6)).max_abs();
  item.pass = diff <= 1e-12 && square_diff <= 1e-9;
  item.detail = "max entry error " + num(diff) + ", |A^2 - 4t id| " + num(square_diff);
  return item;
}

VerifyItem check_lambda(double t) {
  VerifyItem item{"lambda(alpha^t) = 24t, t=" + num(t), true, ""};
  const double got = lambda(family_form(t), standard_volume());
  const double want = 24.0 * t;
  item.pass = std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want));
  item.detail = "lambda = " + num(got);
  return item;
}

}  // namespace

std::vector<VerifyItem> run_golden_checks() {
  std::vector<VerifyItem> items;
  const AlternatingForm dvol = standard_volume();

  for (double t : {-1.0, 1.0, 2.0}) items.push_back(check_contractions(t));
  for (double t : {-1.0, 0.0, 1.0, 2.0}) items.push_back(check_j_matrix(t));
  for (double t : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) items.push_back(check_lambda(t));

  {
    VerifyItem item{"alpha_(ii) equals alpha^{-1} termwise, lambda = -24", true, ""};
    const AlternatingForm ii = normal_form(NormalFormTag::type_ii);
    const double l = lambda(ii, dvol);
    item.pass = ii == family_form(-1.0) && l == -24.0;
    item.detail = "lambda = " + num(l);
    items.push_back(item);
  }
  {
    VerifyItem item{"alpha^t non-degenerate for t in {-1, 0, 1, 2}", true, ""};
    for (double t : {-1.0, 0.0, 1.0, 2.0}) item.pass = item.pass && is_nondegenerate(family_form(t));
    items.push_back(item);
  }
  for (NormalFormTag tag : {NormalFormTag::type_i, NormalFormTag::type_ii, NormalFormTag::type_iii}) {
    const Classification c = classify(normal_form(tag), dvol);
    items.push_back({"classify normal form " + std::string(to_string(tag)), c.type_tag == to_type_tag(tag),
                     "lambda = " + num(c.lambda) + ", tag " + std::string(to_string(c.type_tag))});
  }
  {
    VerifyItem item{"scan omega_f with f = x2 at x2 in {-1, 0, 1}", true, ""};
    const FormField field = parse_field_spec("omega_f: x2");
    ScanReport report = scan(field, parse_grid("0,-1:1:1,0,0,0,0"));
    const std::array<TypeTag, 3> tags{TypeTag::type_ii, TypeTag::type_iii, TypeTag::type_i};
    const std::array<double, 3> lambdas{-24.0, 0.0, 24.0};
    item.pass = report.points.size() == 3;
    for (std::size_t i = 0; item.pass && i < 3; ++i)
      item.pass = report.points[i].tag == tags[i] && std::abs(report.points[i].lambda - lambdas[i]) <= 1e-9 * 24.0;
    const ObstructionVerdict v = detect_obstruction(report, Point6{});
    item.pass = item.pass && v.obstruction;
    std::ostringstream os;
    for (const PointRecord& p : report.points) os << to_string(p.tag) << '(' << num(p.lambda) << ") ";
    os << "obstruction at 0: " << (v.obstruction ? "true" : "false");
    item.detail = os.str();
    items.push_back(item);
  }
  return items;
}

}  // namespace plectic6
