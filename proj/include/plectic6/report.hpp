#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "plectic6/alternating_form.hpp"
#include "plectic6/field.hpp"
#include "plectic6/hitchin.hpp"

namespace plectic6 {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

struct ClosednessCheck {
  std::string method;  // "symbolic" or "finite_difference"
  bool closed = true;
  std::size_t points_checked = 0;
  double max_residual = 0.0;
  std::optional<std::string> warning;
};

struct VerifyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct NormalizationReport {
  TypeTag type_tag = TypeTag::degenerate;
  double lambda = 0.0;
  Matrix map;
  double residual = 0.0;
  double tolerance = 0.0;
};

void to_json(nlohmann::json& j, const Classification& c);
void from_json(const nlohmann::json& j, Classification& c);
void to_json(nlohmann::json& j, const GridSpec& g);
void from_json(const nlohmann::json& j, GridSpec& g);
void to_json(nlohmann::json& j, const PointRecord& p);
void from_json(const nlohmann::json& j, PointRecord& p);
void to_json(nlohmann::json& j, const BoundaryCell& b);
void from_json(const nlohmann::json& j, BoundaryCell& b);
void to_json(nlohmann::json& j, const ObstructionVerdict& v);
void from_json(const nlohmann::json& j, ObstructionVerdict& v);
void to_json(nlohmann::json& j, const ScanReport& r);
void from_json(const nlohmann::json& j, ScanReport& r);
void to_json(nlohmann::json& j, const ClosednessCheck& c);
void from_json(const nlohmann::json& j, ClosednessCheck& c);
void to_json(nlohmann::json& j, const VerifyItem& v);
void from_json(const nlohmann::json& j, VerifyItem& v);
void to_json(nlohmann::json& j, const NormalizationReport& n);
void from_json(const nlohmann::json& j, NormalizationReport& n);

// {"schema_version", "tool_version", "command", "input", "result"}.
nlohmann::json make_document(std::string_view command, nlohmann::json input, nlohmann::json result);

// Human-readable renderings, numbers to 6 significant digits.
std::string render_text(const Classification& c, bool nondegenerate);
std::string render_text(const ScanReport& r, const std::optional<ClosednessCheck>& closedness);
std::string render_text(const NormalizationReport& n);
std::string render_text(const std::vector<VerifyItem>& items);

std::string format_number(double x);  // %.6g

}  // namespace plectic6
