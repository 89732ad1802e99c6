#include "plectic6/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <thread>

#include "plectic6/error.hpp"

namespace plectic6 {

namespace {

constexpr int kDim = 6;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view token, double& out) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return !token.empty() && ec == std::errc() && ptr == token.data() + token.size() && std::isfinite(out);
}

std::string format_point(const Point6& p) {
  std::string out = "(";
  char buf[32];
  for (int i = 0; i < kDim; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", p[i]);
    out += buf;
    out += i + 1 < kDim ? ", " : ")";
  }
  return out;
}

Point6 reduce_periodic(Point6 p) {
  for (double& x : p) x -= std::floor(x);
  return p;
}

GeneralField parse_general_body(std::string_view body) {
  GeneralField field;
  std::array<bool, 20> seen{};
  std::size_t line_no = 1;
  std::size_t entries = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find_first_of("\n;", pos);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view line = trim(body.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::array<int, 3> idx{};
    std::string_view rest = line;
    for (int& i : idx) {
      rest = trim(rest);
      const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), i);
      if (ec != std::errc() || i < 1 || i > kDim)
        throw ParseError("expected three indices in 1..6 followed by an expression", line_no, 0);
      rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    }
    if (!(idx[0] < idx[1] && idx[1] < idx[2]))
      throw ParseError("indices must be strictly increasing", line_no, 0);
    const MultiIndex index{idx[0], idx[1], idx[2]};
    const std::size_t slot = detail::lex_rank(index.mask(), kDim, 3);
    if (seen[slot]) throw ParseError("repeated multi-index " + index.to_string(), line_no, 0);
    seen[slot] = true;
    try {
      field.coefficients[slot] = parse_expr(trim(rest));
    } catch (const ParseError& e) {
      throw ParseError(e.message() + " (expression offset " + std::to_string(e.offset()) + ")", line_no,
                       e.offset());
    }
    ++entries;
  }
  if (entries != 20)
    throw ParseError("general field needs all 20 multi-indices, got " + std::to_string(entries), 0, 0);
  return field;
}

GridAxis parse_axis(std::string_view text, int axis) {
  const std::string where = "grid axis " + std::to_string(axis + 1);
  GridAxis a;
  const std::size_t c1 = text.find(':');
  if (c1 == std::string_view::npos) {
    if (!parse_double(text, a.min)) throw InputError(where + ": invalid number '" + std::string(trim(text)) + "'");
    a.max = a.min;
    return a;
  }
  const std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
    throw InputError(where + ": expected min:max:step");
  if (!parse_double(text.substr(0, c1), a.min) || !parse_double(text.substr(c1 + 1, c2 - c1 - 1), a.max) ||
      !parse_double(text.substr(c2 + 1), a.step))
    throw InputError(where + ": invalid number in '" + std::string(trim(text)) + "'");
  if (a.min > a.max) throw InputError(where + ": min exceeds max");
  if (a.min < a.max && !(a.step > 0.0)) throw InputError(where + ": step must be positive");
  if (a.min == a.max) a.step = 0.0;
  return a;
}

}  // namespace

FormField parse_field_spec(std::string_view text, bool periodic) {
  const std::string_view spec = trim(text);
  constexpr std::string_view kOmega = "omega_f:";
  constexpr std::string_view kGeneral = "general:";
  FormField field;
  field.periodic = periodic;
  if (spec.substr(0, kOmega.size()) == kOmega) {
    field.source = OmegaF{parse_expr(trim(spec.substr(kOmega.size())))};
  } else if (spec.substr(0, kGeneral.size()) == kGeneral) {
    field.source = parse_general_body(spec.substr(kGeneral.size()));
  } else {
    throw ParseError("field spec must start with 'omega_f:' or 'general:'", 1, 0);
  }
  return field;
}

std::size_t GridAxis::count() const {
  if (!(step > 0.0) || max <= min) return 1;
  const double span = (max - min) / step;
  return static_cast<std::size_t>(std::floor(span + 1e-9 * std::max(1.0, span))) + 1;
}

std::size_t GridSpec::point_count() const {
  std::size_t total = 1;
  for (const GridAxis& a : axes) {
    const std::size_t c = a.count();
    if (c != 0 && total > std::numeric_limits<std::size_t>::max() / c) return std::numeric_limits<std::size_t>::max();
    total *= c;
  }
  return total;
}

std::array<std::size_t, 6> GridSpec::shape() const {
  std::array<std::size_t, 6> s{};
  for (int i = 0; i < kDim; ++i) s[i] = axes[i].count();
  return s;
}

GridSpec parse_grid(std::string_view text) {
  GridSpec grid;
  int axis = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view part = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (axis >= kDim) throw InputError("grid spec has more than 6 axes");
    grid.axes[axis] = parse_axis(part, axis);
    ++axis;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (axis != kDim) throw InputError("grid spec needs exactly 6 axes, got " + std::to_string(axis));
  return grid;
}

AlternatingForm eval_field(const FormField& field, const Point6& p) {
  for (double x : p)
    if (!std::isfinite(x)) throw InputError("point " + format_point(p) + " is not finite");
  const Point6 q = field.periodic ? reduce_periodic(p) : p;
  try {
    if (const auto* omega = std::get_if<OmegaF>(&field.source)) return family_form(omega->f.evaluate(q));
    const auto& general = std::get<GeneralField>(field.source);
    std::vector<double> c(20);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = general.coefficients[i].evaluate(q);
    return AlternatingForm(kDim, 3, std::move(c));
  } catch (const EvalError& e) {
    throw EvalError(std::string(e.what()) + " at point " + format_point(p));
  }
}

bool is_closed_omega_f(const FormField& field) {
  const auto* omega = std::get_if<OmegaF>(&field.source);
  if (omega == nullptr)
    throw UnsupportedError("symbolic closedness criterion applies to omega_f fields only; use the finite-difference check");
  static const std::set<std::string> allowed{"x2", "x4", "x5"};
  const auto vars = free_variables(omega->f);
  return std::includes(allowed.begin(), allowed.end(), vars.begin(), vars.end());
}

AlternatingForm exterior_derivative_fd(const FormField& field, const Point6& p, double h) {
  if (!(h > 0.0)) throw InputError("finite-difference step must be positive");
  AlternatingForm d(kDim, 4);
  for (int j = 0; j < kDim; ++j) {
    Point6 forward = p;
    Point6 backward = p;
    forward[j] += h;
    backward[j] -= h;
    const AlternatingForm partial = (1.0 / (2.0 * h)) * (eval_field(field, forward) - eval_field(field, backward));
    d += wedge(basis_form(kDim, {j + 1}), partial);
  }
  return d;
}

std::optional<std::size_t> locate_on_grid(const GridSpec& grid, const Point6& p) {
  std::size_t flat = 0;
  for (int a = 0; a < kDim; ++a) {
    const GridAxis& axis = grid.axes[a];
    const std::size_t count = axis.count();
    std::size_t i = 0;
    if (count > 1) {
      const double r = std::round((p[a] - axis.min) / axis.step);
      if (r < 0.0 || r >= static_cast<double>(count)) return std::nullopt;
      i = static_cast<std::size_t>(r);
    }
    const double tol = 1e-9 * std::max({1.0, std::abs(p[a]), axis.step});
    if (std::abs(axis.value(i) - p[a]) > tol) return std::nullopt;
    flat = flat * count + i;
  }
  return flat;
}

ScanReport scan(const FormField& field, const GridSpec& grid, const ScanOptions& options) {
  const std::size_t total = grid.point_count();
  if (total > options.cap)
    throw InputError("grid has " + (total == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                                       : std::to_string(total)) +
                     " points, above the cap of " + std::to_string(options.cap));

  ScanReport report;
  report.grid = grid;
  report.periodic = field.periodic;
  report.tolerance = options.tol;
  report.points.resize(total);

  const auto shape = grid.shape();
  const AlternatingForm volume = standard_volume();

  auto coordinates_of = [&](std::size_t flat) {
    Point6 p{};
    for (int a = kDim - 1; a >= 0; --a) {
      p[a] = grid.axes[a].value(flat % shape[a]);
      flat /= shape[a];
    }
    return p;
  };

  struct Failure {
    std::size_t index = std::numeric_limits<std::size_t>::max();
    std::string message;
  };

  auto run_block = [&](std::size_t begin, std::size_t end, Failure& failure) {
    for (std::size_t i = begin; i < end; ++i) {
      PointRecord& rec = report.points[i];
      rec.coordinates = coordinates_of(i);
      try {
        const Classification c = classify(eval_field(field, rec.coordinates), volume, options.tol);
        rec.lambda = c.lambda;
        rec.tag = c.type_tag;
      } catch (const EvalError& e) {
        failure = {i, e.what()};
        return;
      }
    }
  };

  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  if (total < 256) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(total, 1)));

  std::vector<Failure> failures(workers);
  if (workers == 1) {
    run_block(0, total, failures[0]);
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(total, w * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      threads.emplace_back(run_block, begin, end, std::ref(failures[w]));
    }
    for (auto& t : threads) t.join();
  }
  for (const Failure& f : failures)
    if (!f.message.empty()) throw EvalError(f.message);

  std::array<std::size_t, 6> stride{};
  stride[kDim - 1] = 1;
  for (int a = kDim - 2; a >= 0; --a) stride[a] = stride[a + 1] * shape[a + 1];
  for (std::size_t i = 0; i < total; ++i) {
    for (int a = 0; a < kDim; ++a) {
      if (shape[a] < 2) continue;
      const std::size_t coord = (i / stride[a]) % shape[a];
      std::size_t neighbour;
      if (coord + 1 < shape[a]) {
        neighbour = i + stride[a];
      } else if (report.periodic && shape[a] > 2) {
        neighbour = i - coord * stride[a];
      } else {
        continue;
      }
      if (report.points[i].tag != report.points[neighbour].tag) report.boundary_cells.push_back({i, neighbour, a});
    }
  }
  return report;
}

ObstructionVerdict detect_obstruction(const ScanReport& report, const Point6& base) {
  const auto located = locate_on_grid(report.grid, base);
  if (!located || *located >= report.points.size())
    throw InputError("base point " + format_point(base) + " does not lie on the scan grid");

  const auto shape = report.grid.shape();
  std::array<std::size_t, 6> base_idx{};
  {
    std::size_t flat = *located;
    for (int a = kDim - 1; a >= 0; --a) {
      base_idx[a] = flat % shape[a];
      flat /= shape[a];
    }
  }

  auto axis_distance = [&](int a, std::size_t i) {
    const std::size_t d = i > base_idx[a] ? i - base_idx[a] : base_idx[a] - i;
    return report.periodic ? std::min(d, shape[a] - d) : d;
  };

  std::size_t max_radius = 0;
  double resolution = 0.0;
  for (int a = 0; a < kDim; ++a) {
    if (shape[a] < 2) continue;
    const std::size_t reach = report.periodic ? shape[a] / 2 : std::max(base_idx[a], shape[a] - 1 - base_idx[a]);
    max_radius = std::max(max_radius, reach);
    const double step = report.grid.axes[a].step;
    resolution = resolution == 0.0 ? step : std::min(resolution, step);
  }

  // Smallest Chebyshev distance from base at which each tag occurs.
  std::array<std::size_t, 4> first_seen;
  first_seen.fill(std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    std::size_t flat = i;
    std::size_t dist = 0;
    for (int a = kDim - 1; a >= 0; --a) {
      dist = std::max(dist, axis_distance(a, flat % shape[a]));
      flat /= shape[a];
    }
    auto& slot = first_seen[static_cast<std::size_t>(report.points[i].tag)];
    slot = std::min(slot, dist);
  }

  ObstructionVerdict v;
  v.base = base;
  v.base_index = *located;
  v.base_tag = report.points[*located].tag;
  v.resolution = resolution;
  v.obstruction = max_radius >= 1;
  for (std::size_t r = 1; r <= max_radius; ++r) {
    RadiusWitness w;
    w.radius = r;
    w.distinct_tags = static_cast<std::size_t>(
        std::count_if(first_seen.begin(), first_seen.end(), [r](std::size_t d) { return d <= r; }));
    w.mixed = w.distinct_tags >= 2;
    v.obstruction = v.obstruction && w.mixed;
    v.radii.push_back(w);
  }

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", resolution);
  if (v.obstruction) {
    v.summary = "type change witnessed at resolution h=" + std::string(buf) + ": every grid ball of radius 1.." +
                std::to_string(max_radius) + " around the base point contains at least two linear types";
  } else if (max_radius == 0) {
    v.summary = "no neighbouring grid points; nothing witnessed";
  } else {
    v.summary = "no type change witnessed at resolution h=" + std::string(buf) +
                ": some grid ball around the base point has a single linear type";
  }
  return v;
}

}  // namespace plectic6
