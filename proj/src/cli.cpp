#include "plectic6/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "plectic6/error.hpp"
#include "plectic6/field.hpp"
#include "plectic6/form_text.hpp"
#include "plectic6/golden.hpp"
#include "plectic6/hitchin.hpp"
#include "plectic6/report.hpp"

namespace plectic6 {

namespace {

using nlohmann::json;

struct Options {
  std::string form;
  std::string field;
  std::string grid;
  double tol = kDefaultClassifyTolerance;
  double fd_step = kDefaultFdStep;
  bool periodic = false;
  std::uint64_t seed = 0;
  std::string sample;
  std::string format = "text";
  std::string output;
  unsigned workers = 0;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return read_all(file);
}

// --form accepts a path, '-' for stdin, or inline text starting with "form "
// where ';' may stand in for newlines.
std::string form_source(const std::string& value, std::istream& in) {
  if (value == "-") return read_all(in);
  if (value.rfind("form ", 0) == 0) {
    std::string text = value;
    for (char& c : text)
      if (c == ';') c = '\n';
    return text;
  }
  return read_file(value);
}

AlternatingForm load_form(const Options& o, std::istream& in, json& echo) {
  if (!o.sample.empty()) {
    if (!o.form.empty()) throw InputError("--form and --sample are mutually exclusive");
    const auto tag = parse_normal_form_tag(o.sample);
    if (!tag) throw InputError("unknown --sample type '" + o.sample + "' (expected type_i, type_ii or type_iii)");
    echo["sample"] = o.sample;
    echo["seed"] = o.seed;
    return random_orbit_sample(*tag, o.seed);
  }
  if (o.form.empty()) throw InputError("one of --form or --sample is required");
  const AlternatingForm form = parse_form_text(form_source(o.form, in));
  echo["form"] = format_form_text(form);
  return form;
}

std::size_t grid_cap() {
  const char* env = std::getenv("PLECTIC6_GRID_CAP");
  if (env == nullptr || *env == '\0') return kDefaultGridCap;
  std::size_t cap = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap == 0)
    throw InputError("PLECTIC6_GRID_CAP must be a positive integer");
  return cap;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : options_(o), out_(out) {}

  void emit(const json& document, const std::string& text) {
    const std::string body = options_.format == "json" ? document.dump(2) + "\n" : text;
    if (options_.output.empty()) {
      out_ << body;
      return;
    }
    std::ofstream file(options_.output, std::ios::binary);
    if (!file) throw InputError("cannot write '" + options_.output + "'");
    file << body;
  }

 private:
  const Options& options_;
  std::ostream& out_;
};

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  json input{{"tol", o.tol}};
  const AlternatingForm form = load_form(o, in, input);
  json result{{"dimension", form.dimension()}, {"degree", form.degree()}};
  std::string text;
  if (form.degree() == 0) throw InputError("classification needs a form of degree >= 1");
  if (form.dimension() == 6 && form.degree() == 3) {
    const Classification c = classify(form, standard_volume(), o.tol);
    const bool nondegenerate = c.type_tag != TypeTag::degenerate;
    result["nondegenerate"] = nondegenerate;
    result.update(json(c));
    text = render_text(c, nondegenerate);
  } else {
    const bool nondegenerate = is_nondegenerate(form, o.tol);
    result["nondegenerate"] = nondegenerate;
    result["lambda"] = nullptr;
    result["type_tag"] = nullptr;
    result["tolerance_used"] = nullptr;
    text = std::string("nondegenerate: ") + (nondegenerate ? "yes" : "no") +
           "\n(linear type classification applies to 3-forms in dimension 6 only)\n";
  }
  Emitter(o, out).emit(make_document("classify", input, result), text);
  return kExitOk;
}

ClosednessCheck check_closedness(const FormField& field, const ScanReport& report, double fd_step) {
  ClosednessCheck check;
  if (field.is_omega_f()) {
    check.method = "symbolic";
    check.closed = is_closed_omega_f(field);
    if (!check.closed)
      check.warning =
          "f depends on variables outside {x2, x4, x5}, so d(omega) = df ^ dx^{245} != 0: the form field is not "
          "closed and therefore not multisymplectic";
    return check;
  }
  check.method = "finite_difference";
  const std::size_t n = report.points.size();
  const std::size_t samples = std::min<std::size_t>(16, n);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t idx = s * n / samples;
    const AlternatingForm d = exterior_derivative_fd(field, report.points[idx].coordinates, fd_step);
    check.max_residual = std::max(check.max_residual, d.max_abs());
  }
  check.points_checked = samples;
  check.closed = check.max_residual <= kClosednessTolerance;
  if (!check.closed)
    check.warning = "finite-difference d(omega) reaches " + format_number(check.max_residual) +
                    " at sampled grid points: the form field is not closed and therefore not multisymplectic";
  return check;
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.field.empty()) throw InputError("--field is required");
  if (o.grid.empty()) throw InputError("--grid is required");
  const std::string field_text = o.field.rfind('@', 0) == 0 ? read_file(o.field.substr(1)) : o.field;
  const FormField field = parse_field_spec(field_text, o.periodic);
  const GridSpec grid = parse_grid(o.grid);

  ScanOptions options;
  options.tol = o.tol;
  options.cap = grid_cap();
  options.workers = o.workers;
  ScanReport report = scan(field, grid, options);
  const ClosednessCheck closedness = check_closedness(field, report, o.fd_step);
  if (locate_on_grid(grid, Point6{})) report.obstruction = detect_obstruction(report, Point6{});

  json input{{"field", field_text}, {"grid", o.grid}, {"tol", o.tol}, {"fd_step", o.fd_step}, {"periodic", o.periodic}};
  json result = report;
  result["closedness"] = closedness;
  Emitter(o, out).emit(make_document("scan", input, result), render_text(report, closedness));
  return kExitOk;
}

int cmd_normalize(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  json input{{"tol", o.tol}};
  const AlternatingForm form = load_form(o, in, input);
  if (form.dimension() != 6 || form.degree() != 3) throw InputError("normalize needs a 3-form in dimension 6");
  const AlternatingForm dvol = standard_volume();
  const Classification c = classify(form, dvol, o.tol);

  NormalizationReport report;
  report.type_tag = c.type_tag;
  report.lambda = c.lambda;
  report.tolerance = o.tol;
  int code = kExitOk;
  try {
    const LinearMap g = normalize(form, dvol, o.tol);
    report.map = g.matrix();
    report.residual = normalization_residual(g, form, c.type_tag == TypeTag::type_i ? NormalFormTag::type_i
                                                                                     : NormalFormTag::type_ii);
  } catch (const UnsupportedError& e) {
    err << "plectic6: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const NormalizationFailed& e) {
    err << "plectic6: " << e.what() << '\n';
    report.map = Matrix(6, 6);
    report.residual = e.best_residual();
    code = kExitVerificationFailed;
  }
  Emitter(o, out).emit(make_document("normalize", input, json(report)), render_text(report));
  return code;
}

int cmd_verify_paper(const Options& o, std::ostream& out) {
  const std::vector<VerifyItem> items = run_golden_checks();
  bool all = true;
  for (const VerifyItem& item : items) all = all && item.pass;
  json result{{"items", items}, {"all_pass", all}};
  Emitter(o, out).emit(make_document("verify-paper", json::object(), result), render_text(items));
  return all ? kExitOk : kExitVerificationFailed;
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", o.output, "Write the report to a file instead of stdout");
}

void add_form_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--form", o.form, "Form text file, '-' for stdin, or inline 'form n=.. k=..;...'");
  cmd->add_option("--sample", o.sample, "Use a random orbit sample of type_i, type_ii or type_iii");
  cmd->add_option("--seed", o.seed, "Seed for --sample");
  cmd->add_option("--tol", o.tol, "Classification tolerance");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exterior algebra and linear-type classification of 3-forms on R^6", "plectic6"};
  app.require_subcommand(1, 1);

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a form: lambda, type tag, non-degeneracy");
  add_form_flags(classify_cmd, o);
  add_output_flags(classify_cmd, o);

  CLI::App* scan_cmd = app.add_subcommand("scan", "Classify a form field on a grid and look for type changes");
  scan_cmd->add_option("--field", o.field, "'omega_f: <expr>' or 'general: ...'; '@path' reads a file");
  scan_cmd->add_option("--grid", o.grid, "Six comma-separated axes: value or min:max:step");
  scan_cmd->add_option("--tol", o.tol, "Classification tolerance");
  scan_cmd->add_option("--fd-step", o.fd_step, "Finite-difference step for the closedness check");
  scan_cmd->add_flag("--periodic", o.periodic, "Evaluate on the torus fundamental domain [0,1)^6");
  scan_cmd->add_option("--workers", o.workers, "Worker threads (0: hardware concurrency)");
  add_output_flags(scan_cmd, o);

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "Find g with g^* a equal to its normal form");
  add_form_flags(normalize_cmd, o);
  add_output_flags(normalize_cmd, o);

  CLI::App* verify_cmd = app.add_subcommand("verify-paper", "Run the golden reference checks");
  add_output_flags(verify_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "plectic6: " << e.what() << '\n';
    return kExitInputError;
  }
  if (!(o.tol > 0.0)) {
    err << "plectic6: --tol must be positive\n";
    return kExitInputError;
  }
  if (!(o.fd_step > 0.0)) {
    err << "plectic6: --fd-step must be positive\n";
    return kExitInputError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, in, out);
    if (scan_cmd->parsed()) return cmd_scan(o, out);
    if (normalize_cmd->parsed()) return cmd_normalize(o, in, out, err);
    return cmd_verify_paper(o, out);
  } catch (const UnsupportedError& e) {
    err << "plectic6: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const InputError& e) {
    err << "plectic6: " << e.what() << '\n';
    return kExitInputError;
  } catch (const EvalError& e) {
    err << "plectic6: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace plectic6
