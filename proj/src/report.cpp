#include "plectic6/report.hpp"

#include <cstdio>
#include <sstream>

#include "plectic6/error.hpp"

namespace plectic6 {

using nlohmann::json;

namespace {

TypeTag tag_from_json(const json& j) {
  const auto tag = parse_type_tag(j.get<std::string>());
  if (!tag) throw InputError("unknown type tag '" + j.get<std::string>() + "'");
  return *tag;
}

std::string format_point(const Point6& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out += format_number(p[i]);
    out += i + 1 < p.size() ? ", " : ")";
  }
  return out;
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x == 0.0 ? 0.0 : x);
  return buf;
}

void to_json(json& j, const Classification& c) {
  j = json{{"lambda", c.lambda}, {"type_tag", to_string(c.type_tag)}, {"tolerance_used", c.tolerance_used}};
}

void from_json(const json& j, Classification& c) {
  c.lambda = j.at("lambda").get<double>();
  c.type_tag = tag_from_json(j.at("type_tag"));
  c.tolerance_used = j.at("tolerance_used").get<double>();
}

void to_json(json& j, const GridSpec& g) {
  j = json::array();
  for (const GridAxis& a : g.axes) j.push_back({{"min", a.min}, {"max", a.max}, {"step", a.step}, {"count", a.count()}});
}

void from_json(const json& j, GridSpec& g) {
  if (!j.is_array() || j.size() != g.axes.size()) throw InputError("grid must list 6 axes");
  for (std::size_t i = 0; i < g.axes.size(); ++i) {
    g.axes[i].min = j[i].at("min").get<double>();
    g.axes[i].max = j[i].at("max").get<double>();
    g.axes[i].step = j[i].at("step").get<double>();
  }
}

void to_json(json& j, const PointRecord& p) {
  j = json{{"coordinates", p.coordinates}, {"lambda", p.lambda}, {"type_tag", to_string(p.tag)}};
}

void from_json(const json& j, PointRecord& p) {
  p.coordinates = j.at("coordinates").get<Point6>();
  p.lambda = j.at("lambda").get<double>();
  p.tag = tag_from_json(j.at("type_tag"));
}

void to_json(json& j, const BoundaryCell& b) {
  j = json{{"first", b.first}, {"second", b.second}, {"axis", b.axis + 1}};
}

void from_json(const json& j, BoundaryCell& b) {
  b.first = j.at("first").get<std::size_t>();
  b.second = j.at("second").get<std::size_t>();
  b.axis = j.at("axis").get<int>() - 1;
}

void to_json(json& j, const ObstructionVerdict& v) {
  json radii = json::array();
  for (const RadiusWitness& w : v.radii)
    radii.push_back({{"radius", w.radius}, {"distinct_tags", w.distinct_tags}, {"mixed", w.mixed}});
  j = json{{"base", v.base},
           {"base_index", v.base_index},
           {"base_type_tag", to_string(v.base_tag)},
           {"radii", radii},
           {"obstruction", v.obstruction},
           {"resolution", v.resolution},
           {"summary", v.summary}};
}

void from_json(const json& j, ObstructionVerdict& v) {
  v.base = j.at("base").get<Point6>();
  v.base_index = j.at("base_index").get<std::size_t>();
  v.base_tag = tag_from_json(j.at("base_type_tag"));
  v.radii.clear();
  for (const json& w : j.at("radii"))
    v.radii.push_back({w.at("radius").get<std::size_t>(), w.at("distinct_tags").get<std::size_t>(),
                       w.at("mixed").get<bool>()});
  v.obstruction = j.at("obstruction").get<bool>();
  v.resolution = j.at("resolution").get<double>();
  v.summary = j.at("summary").get<std::string>();
}

void to_json(json& j, const ScanReport& r) {
  j = json{{"grid", r.grid},
           {"periodic", r.periodic},
           {"tolerance", r.tolerance},
           {"points", r.points},
           {"boundary_cells", r.boundary_cells},
           {"obstruction", r.obstruction ? json(*r.obstruction) : json(nullptr)}};
}

void from_json(const json& j, ScanReport& r) {
  r.grid = j.at("grid").get<GridSpec>();
  r.periodic = j.at("periodic").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  r.points = j.at("points").get<std::vector<PointRecord>>();
  r.boundary_cells = j.at("boundary_cells").get<std::vector<BoundaryCell>>();
  const json& o = j.at("obstruction");
  r.obstruction = o.is_null() ? std::nullopt : std::optional<ObstructionVerdict>(o.get<ObstructionVerdict>());
}

void to_json(json& j, const ClosednessCheck& c) {
  j = json{{"method", c.method},
           {"closed", c.closed},
           {"points_checked", c.points_checked},
           {"max_residual", c.max_residual},
           {"warning", c.warning ? json(*c.warning) : json(nullptr)}};
}

void from_json(const json& j, ClosednessCheck& c) {
  c.method = j.at("method").get<std::string>();
  c.closed = j.at("closed").get<bool>();
  c.points_checked = j.at("points_checked").get<std::size_t>();
  c.max_residual = j.at("max_residual").get<double>();
  const json& w = j.at("warning");
  c.warning = w.is_null() ? std::nullopt : std::optional<std::string>(w.get<std::string>());
}

void to_json(json& j, const VerifyItem& v) {
  j = json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}};
}

void from_json(const json& j, VerifyItem& v) {
  v.name = j.at("name").get<std::string>();
  v.pass = j.at("pass").get<bool>();
  v.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, const NormalizationReport& n) {
  json rows = json::array();
  for (std::size_t r = 0; r < n.map.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n.map.cols(); ++c) row.push_back(n.map(r, c));
    rows.push_back(row);
  }
  j = json{{"type_tag", to_string(n.type_tag)},
           {"lambda", n.lambda},
           {"matrix", rows},
           {"residual", n.residual},
           {"tolerance", n.tolerance},
           {"within_tolerance", n.residual <= n.tolerance}};
}

void from_json(const json& j, NormalizationReport& n) {
  n.type_tag = tag_from_json(j.at("type_tag"));
  n.lambda = j.at("lambda").get<double>();
  const json& rows = j.at("matrix");
  n.map = Matrix(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) n.map(r, c) = rows[r][c].get<double>();
  n.residual = j.at("residual").get<double>();
  n.tolerance = j.at("tolerance").get<double>();
}

json make_document(std::string_view command, json input, json result) {
  return json{{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)}};
}

std::string render_text(const Classification& c, bool nondegenerate) {
  std::ostringstream os;
  os << "nondegenerate: " << (nondegenerate ? "yes" : "no") << '\n';
  os << "lambda: " << format_number(c.lambda) << '\n';
  os << "type: " << to_string(c.type_tag) << '\n';
  os << "tolerance: " << format_number(c.tolerance_used) << '\n';
  return os.str();
}

std::string render_text(const ScanReport& r, const std::optional<ClosednessCheck>& closedness) {
  std::ostringstream os;
  if (closedness) {
    os << "closedness (" << closedness->method << "): " << (closedness->closed ? "closed" : "NOT closed");
    if (closedness->method == "finite_difference")
      os << ", max |d omega| " << format_number(closedness->max_residual) << " over " << closedness->points_checked
         << " points";
    os << '\n';
    if (closedness->warning) os << "WARNING: " << *closedness->warning << '\n';
  }
  os << "points: " << r.points.size() << (r.periodic ? " (periodic)" : "") << '\n';
  for (const PointRecord& p : r.points)
    os << "  " << format_point(p.coordinates) << "  lambda=" << format_number(p.lambda) << "  " << to_string(p.tag)
       << '\n';
  os << "boundary cells: " << r.boundary_cells.size() << '\n';
  for (const BoundaryCell& b : r.boundary_cells)
    os << "  " << b.first << " <-> " << b.second << " (axis " << b.axis + 1 << ")\n";
  if (r.obstruction) {
    os << "obstruction at " << format_point(r.obstruction->base) << ": "
       << (r.obstruction->obstruction ? "true" : "false") << '\n';
    os << "  " << r.obstruction->summary << '\n';
  }
  return os.str();
}

std::string render_text(const NormalizationReport& n) {
  std::ostringstream os;
  os << "type: " << to_string(n.type_tag) << '\n';
  os << "lambda: " << format_number(n.lambda) << '\n';
  os << "g:\n";
  for (std::size_t r = 0; r < n.map.rows(); ++r) {
    os << ' ';
    for (std::size_t c = 0; c < n.map.cols(); ++c) os << ' ' << format_number(n.map(r, c));
    os << '\n';
  }
  os << "residual: " << format_number(n.residual) << (n.residual <= n.tolerance ? " (ok)" : " (above tolerance)")
     << '\n';
  return os.str();
}

std::string render_text(const std::vector<VerifyItem>& items) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const VerifyItem& item : items) {
    os << (item.pass ? "PASS " : "FAIL ") << item.name;
    if (!item.detail.empty()) os << "  [" << item.detail << ']';
    os << '\n';
    passed += item.pass ? 1 : 0;
  }
  os << passed << '/' << items.size() << " items passed\n";
  return os.str();
}

}  // namespace plectic6
