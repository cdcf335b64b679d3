#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "liestat/cubic_form.hpp"
#include "liestat/inner_product.hpp"
#include "liestat/lie_algebra.hpp"

namespace liestat {

/// Round to 12 significant digits (the JSON serialization precision);
/// normalizes -0 to 0.
double round_sig(double v, int digits = 12);

struct Tolerances {
  double rank = 1e-9;
  double validity = 1e-9;
  double hessian_flat = 1e-9;
};

/// A group spec document: algebra + metric, optional cubic form.  Numeric
/// input is rounded to the serialization precision on load so that an echoed
/// document reproduces the computation byte-for-byte.
struct GroupSpec {
  LieAlgebra algebra;
  InnerProduct metric;
  std::optional<CubicForm> cubic;
  Tolerances tolerances;
  nlohmann::ordered_json echo;  // normalized raw form of the input document
};

/// Parses {preset: {name, params}} | {raw: {dim, brackets}}, optional metric,
/// cubic and tolerances.  Indices are 1-based in documents.
GroupSpec parse_group_spec(const nlohmann::json& doc);

GroupSpec load_group_spec(const std::string& path);

struct ReportOptions {
  bool classify = false;
};

nlohmann::ordered_json build_report(const GroupSpec& spec, const ReportOptions& options = {});

/// Aligned text rendering of a report, 6 significant digits.
std::string render_text(const nlohmann::ordered_json& report);

/// Serialized JSON form (2-space indent, trailing newline).
std::string render_json(const nlohmann::ordered_json& report);

}  // namespace liestat
