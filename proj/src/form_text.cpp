#include "plectic6/form_text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "plectic6/error.hpp"

namespace plectic6 {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_int(std::string_view token, int& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && std::isfinite(out);
}

int parse_header_field(std::string_view token, std::string_view key, std::size_t line) {
  int value = 0;
  if (token.substr(0, key.size()) != key || !parse_int(token.substr(key.size()), value))
    throw ParseError("expected '" + std::string(key) + "<integer>' in header", line, 0);
  return value;
}

}  // namespace

AlternatingForm parse_form_text(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  AlternatingForm form;
  std::set<IndexMask> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "form")
        throw ParseError("expected header 'form n=<n> k=<k>'", line_no, 0);
      const int n = parse_header_field(tokens[1], "n=", line_no);
      const int k = parse_header_field(tokens[2], "k=", line_no);
      if (n < 1 || n > kMaxDimension || k < 0 || k > n)
        throw ParseError("invalid dimension/degree in header", line_no, 0);
      form = AlternatingForm(n, k);
      have_header = true;
      continue;
    }

    const std::size_t k = static_cast<std::size_t>(form.degree());
    if (tokens.size() != k + 1)
      throw ParseError("expected " + std::to_string(k) + " indices and a coefficient", line_no, 0);
    std::vector<int> indices(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (!parse_int(tokens[i], indices[i]) || indices[i] < 1 || indices[i] > form.dimension())
        throw ParseError("index '" + std::string(tokens[i]) + "' out of range", line_no, 0);
      if (i > 0 && indices[i] <= indices[i - 1])
        throw ParseError("indices must be strictly increasing", line_no, 0);
    }
    double value = 0.0;
    if (!parse_double(tokens[k], value))
      throw ParseError("invalid coefficient '" + std::string(tokens[k]) + "'", line_no, 0);
    const MultiIndex index(std::move(indices));
    if (!seen.insert(index.mask()).second)
      throw ParseError("repeated multi-index " + index.to_string(), line_no, 0);
    form.add(index, value);
  }
  if (!have_header) throw ParseError("missing 'form n=<n> k=<k>' header", line_no, 0);
  return form;
}

std::string format_form_text(const AlternatingForm& form) {
  std::string out = "form n=" + std::to_string(form.dimension()) + " k=" + std::to_string(form.degree()) + "\n";
  const auto& masks = detail::subsets(form.dimension(), form.degree());
  char buf[32];
  for (std::size_t pos = 0; pos < masks.size(); ++pos) {
    const double c = form.coefficients()[pos];
    if (c == 0.0) continue;
    for (int i : MultiIndex::from_mask(masks[pos])) out += std::to_string(i) + ' ';
    std::snprintf(buf, sizeof buf, "%.17g", c);
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace plectic6
