// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "plectic6/alternating_form.hpp"
#include "plectic6/error.hpp"
#include "plectic6/field.hpp"
#include "plectic6/hitchin.hpp"
#include "plectic6/random.hpp"
#include "support/oracle.hpp"

using namespace plectic6;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

double rel_diff(const AlternatingForm& a, const AlternatingForm& b) {
  return max_abs_difference(a, b) / std::max({1.0, a.max_abs(), b.max_abs()});
}

std::string str(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::vector<std::vector<double>> rows(const LinearMap& g) {
  const Matrix& m = g.matrix();
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

std::vector<double> components(const Vector& v) { return {v.components().begin(), v.components().end()}; }

Outcome contractions() {
  Outcome o;
  for (double t : {-1.0, 1.0, 2.0}) {
    struct Term {
      int i, j;
      double c;
    };
    const std::vector<std::vector<Term>> printed{
        {{3, 5, 1}, {4, 6, -1}}, {{3, 6, -1}, {4, 5, t}}, {{1, 5, -1}, {2, 6, 1}},
        {{1, 6, 1}, {2, 5, -t}}, {{1, 3, 1}, {2, 4, t}},  {{1, 4, -1}, {2, 3, -1}},
    };
    for (int j = 1; j <= 6; ++j) {
      AlternatingForm want(6, 2);
      for (const Term& term : printed[j - 1]) want.add(MultiIndex{term.i, term.j}, term.c);
      const AlternatingForm got = contract(Vector::basis(6, j), family_form(t));
      o.require(got == want, "t=" + str(t) + " j=" + std::to_string(j) + ": " + got.to_string());
    }
  }
  return o;
}

Outcome j_matrix() {
  Outcome o;
  for (double t : {-1.0, 0.0, 1.0, 2.0}) {
    const Matrix printed(6, 6, {0, -2 * t, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, -2 * t, 0, 0,
                                0, 0, -2, 0, 0, 0,  0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2 * t, 0});
    const Matrix a = build_J(family_form(t), standard_volume()).endo;
    const double entry = (a - printed).max_abs();
    const double square = (a * a - (4.0 * t) * Matrix::identity(6)).max_abs();
    o.require(entry <= 1e-12, "t=" + str(t) + " entry error " + str(entry));
    o.require(square <= 1e-9, "t=" + str(t) + " |A^2 - 4t| " + str(square));
  }
  return o;
}

Outcome invariant() {
  Outcome o;
  for (double t : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
    const double l = lambda(family_form(t), standard_volume());
    o.require(rel(l, 24.0 * t) <= 1e-9, "t=" + str(t) + " lambda " + str(l));
  }
  const AlternatingForm ii = normal_form(NormalFormTag::type_ii);
  o.require(ii == family_form(-1.0), "alpha_(ii) differs from alpha^{-1}");
  const double l = lambda(ii, standard_volume());
  o.require(l == -24.0, "lambda(alpha_(ii)) = " + str(l));
  return o;
}

Outcome nondegeneracy() {
  Outcome o;
  Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(-10.0, 10.0);
    o.require(is_nondegenerate(family_form(t)), "alpha^t degenerate at t=" + str(t));
  }
  o.require(!is_nondegenerate(basis_form(6, {1, 2, 3})), "dx^123 reported non-degenerate");
  return o;
}

Outcome trichotomy() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const AlternatingForm dvol = standard_volume();
  for (NormalFormTag tag : {NormalFormTag::type_i, NormalFormTag::type_ii, NormalFormTag::type_iii}) {
    o.require(classify(normal_form(tag), dvol).type_tag == to_type_tag(tag),
              "normal form " + std::string(to_string(tag)));
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const Classification c = classify(random_orbit_sample(tag, seed), dvol);
      o.require(c.type_tag == to_type_tag(tag),
                std::string(to_string(tag)) + " seed " + std::to_string(seed) + " -> " +
                    std::string(to_string(c.type_tag)));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < 5.0, "took " + str(seconds) + " s");
  if (o.pass) o.detail = "303 classifications in " + str(seconds) + " s";
  return o;
}

Outcome equivariance() {
  Outcome o;
  Rng rng(6);
  const AlternatingForm dvol = standard_volume();
  for (int i = 0; i < 100; ++i) {
    const AlternatingForm a = random_form(rng, 6, 3);
    const double la = lambda(a, dvol);
    const LinearMap g = random_invertible(rng, 6);
    const double det = g.determinant();
    o.require(rel(lambda(pullback(g, a), dvol), det * det * la) <= 1e-6, "pullback case " + std::to_string(i));
    const double c = rng.uniform(0.5, 2.0) * (rng.uniform01() < 0.5 ? -1.0 : 1.0);
    o.require(rel(lambda(c * a, dvol), std::pow(c, 4) * la) <= 1e-6, "scaling case " + std::to_string(i));
    o.require(rel(lambda(a, c * dvol), la / (c * c)) <= 1e-6, "volume case " + std::to_string(i));
  }
  return o;
}

Outcome normalizer() {
  Outcome o;
  const AlternatingForm dvol = standard_volume();
  double worst = 0.0;
  for (NormalFormTag tag : {NormalFormTag::type_i, NormalFormTag::type_ii}) {
    for (std::uint64_t seed = 1000; seed < 1050; ++seed) {
      const AlternatingForm a = random_orbit_sample(tag, seed);
      try {
        const LinearMap g = normalize(a, dvol);
        const double r = max_abs_difference(pullback(g, a), normal_form(tag));
        worst = std::max(worst, r);
        o.require(r <= 1e-6, std::string(to_string(tag)) + " seed " + std::to_string(seed) + " residual " + str(r));
      } catch (const std::exception& e) {
        o.require(false, std::string(to_string(tag)) + " seed " + std::to_string(seed) + ": " + e.what());
      }
    }
  }
  bool unsupported = false;
  try {
    normalize(family_form(0.0), dvol);
  } catch (const UnsupportedError&) {
    unsupported = true;
  }
  o.require(unsupported, "alpha^0 did not raise the unsupported-type error");
  if (o.pass) o.detail = "worst residual " + str(worst);
  return o;
}

Outcome linear_scan() {
  Outcome o;
  const ScanReport r = scan(parse_field_spec("omega_f: x2"), parse_grid("0,-1:1:1,0,0,0,0"));
  const std::vector<double> lambdas{-24.0, 0.0, 24.0};
  const std::vector<TypeTag> tags{TypeTag::type_ii, TypeTag::type_iii, TypeTag::type_i};
  o.require(r.points.size() == 3, "expected 3 points");
  for (std::size_t i = 0; o.pass && i < 3; ++i) {
    o.require(rel(r.points[i].lambda, lambdas[i]) <= 1e-9, "lambda " + str(r.points[i].lambda));
    o.require(r.points[i].tag == tags[i], "tag " + std::string(to_string(r.points[i].tag)));
  }
  if (o.pass) o.require(detect_obstruction(r, Point6{}).obstruction, "no obstruction at the origin");
  return o;
}

Outcome closedness() {
  Outcome o;
  for (const char* f : {"x2", "sin(2*pi*x2)", "x2*x4 - x5"})
    o.require(is_closed_omega_f(parse_field_spec(std::string("omega_f: ") + f)), std::string("rejected ") + f);
  o.require(!is_closed_omega_f(parse_field_spec("omega_f: x1")), "accepted x1");
  Rng rng(9);
  const FormField linear = parse_field_spec("omega_f: x2");
  const FormField tilted = parse_field_spec("omega_f: x1");
  for (int i = 0; i < 10; ++i) {
    Point6 p{};
    for (double& x : p) x = rng.uniform(-1.0, 1.0);
    const double d = exterior_derivative_fd(linear, p, 1e-4).max_abs();
    o.require(d <= 1e-6, "|d omega_x2| = " + str(d));
    const double c = exterior_derivative_fd(tilted, p, 1e-4).coefficient(MultiIndex{1, 2, 4, 5});
    o.require(std::abs(std::abs(c) - 1.0) <= 1e-6, "dx^1245 coefficient " + str(c));
  }
  return o;
}

Outcome torus() {
  Outcome o;
  const ScanReport r = scan(parse_field_spec("omega_f: sin(2*pi*x2)", true), parse_grid("0,0:0.75:0.25,0,0,0,0"));
  const std::vector<TypeTag> tags{TypeTag::type_iii, TypeTag::type_i, TypeTag::type_iii, TypeTag::type_ii};
  o.require(r.points.size() == 4, "expected 4 points");
  for (std::size_t i = 0; o.pass && i < 4; ++i)
    o.require(r.points[i].tag == tags[i], "point " + std::to_string(i) + " " + std::string(to_string(r.points[i].tag)));
  bool wrap = false;
  for (const BoundaryCell& b : r.boundary_cells) wrap = wrap || (b.first == 3 && b.second == 0);
  o.require(!r.boundary_cells.empty(), "no boundary cells");
  o.require(wrap, "no wrap-around boundary cell");
  return o;
}

Outcome algebra() {
  Outcome o;
  constexpr double tol = 1e-12;
  Rng rng(11);
  double worst = 0.0;
  auto check = [&](double d, const std::string& what) {
    worst = std::max(worst, d);
    o.require(d <= tol, what + " " + str(d));
  };
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 6;
    const int k = 1 + i % n;
    const int l = 1 + (i / 3) % n;
    const AlternatingForm a = random_form(rng, n, k);
    if (k + l <= n) {
      const AlternatingForm b = random_form(rng, n, l);
      check(rel_diff(wedge(a, b), ((k * l) % 2 ? -1.0 : 1.0) * wedge(b, a)), "anticommutativity");
    }
    const int m = std::max(0, n - k - l);
    if (k + l + m <= n && k + l <= n) {
      const AlternatingForm b = random_form(rng, n, l);
      const AlternatingForm c = random_form(rng, n, m);
      check(rel_diff(wedge(wedge(a, b), c), wedge(a, wedge(b, c))), "associativity");
      const Vector v = random_vector(rng, n);
      const AlternatingForm lhs = contract(v, wedge(a, b));
      const AlternatingForm rhs = wedge(contract(v, a), b) + (k % 2 ? -1.0 : 1.0) * wedge(a, contract(v, b));
      check(rel_diff(lhs, rhs), "antiderivation");
    }
    if (k >= 2) {
      const Vector v = random_vector(rng, n);
      check(contract(v, contract(v, a)).max_abs() / std::max(1.0, a.max_abs()), "i_v i_v");
    }
    const LinearMap g = random_invertible(rng, n);
    const LinearMap h = random_invertible(rng, n);
    check(rel_diff(pullback(g * h, a), pullback(h, pullback(g, a))), "functoriality");
  }
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 4;
    const int k = i % (n + 1);
    const int l = (i / 5) % (n + 1 - k);
    const AlternatingForm a = random_form(rng, n, k);
    const AlternatingForm b = random_form(rng, n, l);
    check(rel_diff(wedge(a, b), oracle::wedge(a, b)), "oracle wedge");
    if (k >= 1) {
      const Vector v = random_vector(rng, n);
      check(rel_diff(contract(v, a), oracle::contract(components(v), a)), "oracle contract");
    }
    const LinearMap g = random_invertible(rng, n);
    check(rel_diff(pullback(g, a), oracle::pullback(rows(g), a)), "oracle pullback");
  }
  if (o.pass) o.detail = "worst relative error " + str(worst);
  return o;
}

int exit_status(const std::string& command) {
  const int raw = std::system(command.c_str());
  if (raw == -1 || !WIFEXITED(raw)) return -1;
  return WEXITSTATUS(raw);
}

Outcome verify_paper() {
  Outcome o;
  const int good = exit_status(std::string("\"") + PLECTIC6_CLI_PATH + "\" verify-paper > /dev/null 2>&1");
  o.require(good == 0, "verify-paper exited " + std::to_string(good));
#ifdef PLECTIC6_MUTANT_PATH
  const int bad = exit_status(std::string("\"") + PLECTIC6_MUTANT_PATH + "\" verify-paper > /dev/null 2>&1");
  o.require(bad == 1, "mutation build exited " + std::to_string(bad));
#else
  o.require(false, "mutation build not configured");
#endif
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"contractions of alpha^t match the printed 2-forms", contractions},
      {"J matrix and A^2 = 4t id", j_matrix},
      {"lambda(alpha^t) = 24t and lambda(alpha_(ii)) = -24", invariant},
      {"non-degeneracy of alpha^t, degeneracy of dx^123", nondegeneracy},
      {"trichotomy on normal forms and orbit samples", trichotomy},
      {"equivariance of lambda", equivariance},
      {"normalizer soundness and type (iii) rejection", normalizer},
      {"scan of omega_f with f = x2 and obstruction at the origin", linear_scan},
      {"closedness criterion and finite differences", closedness},
      {"torus scan with wrap-around boundary", torus},
      {"exterior algebra properties and oracle equivalence", algebra},
      {"verify-paper passes, mutation build fails", verify_paper},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] AC-%02zu %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.empty() ? "" : "  -- ", o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
