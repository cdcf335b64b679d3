#include "liestat/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "liestat/classify.hpp"
#include "liestat/connection.hpp"
#include "liestat/errors.hpp"
#include "liestat/presets.hpp"
#include "liestat/statistical.hpp"

namespace liestat {

using nlohmann::json;
using nlohmann::ordered_json;

double round_sig(double v, int digits) {
  if (v == 0.0) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

namespace {

ordered_json vec_json(const Eigen::VectorXd& v) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(round_sig(v(i)));
  return out;
}

ordered_json matrix_json(const Eigen::MatrixXd& m) {
  ordered_json out = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r).transpose()));
  return out;
}

ordered_json bilinear_json(const BilinearMap& b) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < b.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < b.dim(); ++j) row.push_back(vec_json(b.slot(i).col(j)));
    out.push_back(row);
  }
  return out;
}

ordered_json curvature_json(const CurvatureTensor& r) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < r.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < r.dim(); ++j) row.push_back(matrix_json(r.op(i, j)));
    out.push_back(row);
  }
  return out;
}

int index_entry(const json& entry, size_t pos, int dim, const std::string& where) {
  if (!entry.is_number_integer())
    throw ParseError(where + ": index #" + std::to_string(pos + 1) + " must be an integer");
  const int v = entry.get<int>();
  if (v < 1 || v > dim)
    throw ParseError(where + ": index " + std::to_string(v) + " out of range 1.." +
                     std::to_string(dim));
  return v - 1;
}

double number_entry(const json& entry, const std::string& where) {
  if (!entry.is_number()) throw ParseError(where + ": value must be a number");
  return round_sig(entry.get<double>());
}

LieAlgebra parse_raw_algebra(const json& raw, double tol) {
  if (!raw.contains("dim") || !raw["dim"].is_number_integer())
    throw ParseError("raw: missing integer field 'dim'");
  const int dim = raw["dim"].get<int>();
  if (dim < 1 || dim > 6) throw ParseError("raw: dim must be between 1 and 6");
  BilinearMap c(dim);
  std::set<std::array<int, 3>> seen;
  if (raw.contains("brackets")) {
    if (!raw["brackets"].is_array()) throw ParseError("raw: 'brackets' must be an array");
    size_t pos = 0;
    for (const auto& entry : raw["brackets"]) {
      const std::string where = "brackets[" + std::to_string(pos) + "]";
      ++pos;
      if (!entry.is_array() || entry.size() != 4)
        throw ParseError(where + ": expected [i, j, k, value]");
      const int i = index_entry(entry[0], 0, dim, where);
      const int j = index_entry(entry[1], 1, dim, where);
      const int k = index_entry(entry[2], 2, dim, where);
      const double v = number_entry(entry[3], where);
      if (i == j) throw ParseError(where + ": bracket requires distinct i, j");
      if (!seen.insert({std::min(i, j), std::max(i, j), k}).second)
        throw ParseError(where + ": duplicate bracket component");
      c.set(k, i, j, i < j ? v : -v);
      c.set(k, j, i, i < j ? -v : v);
    }
  }
  try {
    return LieAlgebra(c, tol);
  } catch (const ValidationError& err) {
    throw ValidationError(std::string("raw algebra: ") + err.what());
  }
}

CubicForm parse_cubic(const json& doc, int dim) {
  if (!doc.is_array()) throw ParseError("cubic: must be an array of [i, j, k, value]");
  CubicForm cubic(dim);
  std::set<int> seen;
  size_t pos = 0;
  for (const auto& entry : doc) {
    const std::string where = "cubic[" + std::to_string(pos) + "]";
    ++pos;
    if (!entry.is_array() || entry.size() != 4)
      throw ParseError(where + ": expected [i, j, k, value]");
    const int i = index_entry(entry[0], 0, dim, where);
    const int j = index_entry(entry[1], 1, dim, where);
    const int k = index_entry(entry[2], 2, dim, where);
    if (!seen.insert(CubicForm::flat_index(dim, i, j, k)).second)
      throw ParseError(where + ": duplicate cubic component");
    cubic.set(i, j, k, number_entry(entry[3], where));
  }
  return cubic;
}

InnerProduct parse_metric(const json& doc, int dim) {
  if (doc.is_string()) {
    if (doc.get<std::string>() != "orthonormal")
      throw ParseError("metric: unknown keyword '" + doc.get<std::string>() + "'");
    return InnerProduct::orthonormal(dim);
  }
  if (!doc.is_array() || static_cast<int>(doc.size()) != dim)
    throw ParseError("metric: expected 'orthonormal' or " + std::to_string(dim) + " rows");
  Eigen::MatrixXd g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (!doc[r].is_array() || static_cast<int>(doc[r].size()) != dim)
      throw ParseError("metric: row " + std::to_string(r + 1) + " must have " +
                       std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c)
      g(r, c) = number_entry(doc[r][c], "metric[" + std::to_string(r + 1) + "]");
  }
  return InnerProduct(g);
}

/// Rebuilds the algebra from 12-digit-rounded constants so computation and
/// echo agree bitwise.
LieAlgebra rounded(const LieAlgebra& alg) {
  BilinearMap c(alg.dim());
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      for (int k = 0; k < alg.dim(); ++k) c.set(k, i, j, round_sig(alg.structure().coeff(k, i, j)));
  return LieAlgebra(c);
}

ordered_json echo_document(const LieAlgebra& alg, const json& metric_doc,
                           const std::optional<CubicForm>& cubic, const Tolerances& tol) {
  ordered_json echo;
  ordered_json raw;
  raw["dim"] = alg.dim();
  ordered_json brackets = ordered_json::array();
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j)
      for (int k = 0; k < alg.dim(); ++k) {
        const double v = alg.structure().coeff(k, i, j);
        if (v != 0.0) brackets.push_back({i + 1, j + 1, k + 1, round_sig(v)});
      }
  raw["brackets"] = std::move(brackets);
  echo["raw"] = std::move(raw);
  echo["metric"] = metric_doc;
  if (cubic) {
    ordered_json entries = ordered_json::array();
    for (const auto& t : CubicForm::triples(cubic->dim())) {
      const double v = (*cubic)(t[0], t[1], t[2]);
      if (v != 0.0) entries.push_back({t[0] + 1, t[1] + 1, t[2] + 1, round_sig(v)});
    }
    echo["cubic"] = std::move(entries);
  }
  echo["tolerances"] = {{"rank", tol.rank},
                        {"validity", tol.validity},
                        {"hessian_flat", tol.hessian_flat}};
  return echo;
}

}  // namespace

GroupSpec parse_group_spec(const json& doc) {
  if (!doc.is_object()) throw ParseError("spec: top level must be an object");
  Tolerances tol;
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) throw ParseError("tolerances: must be an object");
    if (t.contains("rank")) tol.rank = number_entry(t["rank"], "tolerances.rank");
    if (t.contains("validity")) tol.validity = number_entry(t["validity"], "tolerances.validity");
    if (t.contains("hessian_flat"))
      tol.hessian_flat = number_entry(t["hessian_flat"], "tolerances.hessian_flat");
  }

  std::optional<LieAlgebra> alg;
  if (doc.contains("preset")) {
    const auto& p = doc["preset"];
    if (!p.is_object() || !p.contains("name") || !p["name"].is_string())
      throw ParseError("preset: expected {name, params}");
    std::vector<double> params;
    if (p.contains("params")) {
      if (!p["params"].is_array()) throw ParseError("preset: 'params' must be an array");
      for (const auto& v : p["params"]) params.push_back(number_entry(v, "preset.params"));
    }
    alg = rounded(preset(p["name"].get<std::string>(), params));
  } else if (doc.contains("raw")) {
    alg = parse_raw_algebra(doc["raw"], tol.validity);
  } else {
    throw ParseError("spec: needs either 'preset' or 'raw'");
  }

  json metric_doc = doc.contains("metric") ? doc["metric"] : json("orthonormal");
  InnerProduct metric = parse_metric(metric_doc, alg->dim());

  std::optional<CubicForm> cubic;
  if (doc.contains("cubic")) cubic = parse_cubic(doc["cubic"], alg->dim());

  ordered_json metric_echo;
  if (metric_doc.is_string())
    metric_echo = "orthonormal";
  else
    metric_echo = matrix_json(metric.gram());

  GroupSpec spec{std::move(*alg), std::move(metric), std::move(cubic), tol, {}};
  spec.echo = echo_document(spec.algebra, metric_echo, spec.cubic, spec.tolerances);
  return spec;
}

GroupSpec load_group_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("spec parse error: ") + err.what());
  }
  return parse_group_spec(doc);
}

ordered_json build_report(const GroupSpec& spec, const ReportOptions& options) {
  const LieAlgebra& alg = spec.algebra;
  const InnerProduct& ip = spec.metric;
  const int n = alg.dim();

  ordered_json report;
  report["spec"] = spec.echo;

  ordered_json algebra;
  algebra["dim"] = n;
  algebra["jacobi_defect"] = round_sig(alg.jacobi_defect());
  const UnimodularKernel uk = unimodular_kernel(alg);
  algebra["unimodular"] = uk.is_unimodular;
  algebra["unimodular_kernel_dim"] = static_cast<int>(uk.basis.size());
  ordered_json kernel_basis = ordered_json::array();
  for (const auto& v : uk.basis) kernel_basis.push_back(vec_json(v));
  algebra["unimodular_kernel"] = std::move(kernel_basis);
  report["algebra"] = std::move(algebra);

  ordered_json geometry;
  geometry["u_map"] = bilinear_json(u_map(alg, ip));
  const Connection lc = levi_civita(alg, ip);
  geometry["levi_civita"] = bilinear_json(lc.gamma());
  const CurvatureTensor rg = curvature(alg, lc);
  geometry["curvature"] = curvature_json(rg);
  geometry["ricci"] = matrix_json(ricci(alg, lc));
  geometry["scalar_curvature"] = round_sig(scalar_curvature(alg, ip, lc));
  ordered_json sectional = ordered_json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      sectional.push_back({i + 1, j + 1,
                           round_sig(sectional_curvature(ip, rg, Eigen::VectorXd::Unit(n, i),
                                                         Eigen::VectorXd::Unit(n, j)))});
  geometry["sectional"] = std::move(sectional);
  report["geometry"] = std::move(geometry);

  if (spec.cubic) {
    const StatisticalStructure stat(alg, ip, *spec.cubic);
    ordered_json st;
    st["skewness"] = bilinear_json(stat.skewness().map());
    st["alpha_connection"] = bilinear_json(statistical_connection(stat, 1.0).gamma());
    const StatisticalCheck check =
        is_statistical(alg, ip, statistical_connection(stat, 1.0), spec.tolerances.validity);
    st["is_statistical"] = check.is_statistical;
    st["statistical_defect"] = round_sig(check.defect);
    const double conj = conjugate_symmetry_defect(stat);
    st["conjugate_symmetry_defect"] = round_sig(conj);
    st["sectional_well_defined"] = conj <= spec.tolerances.validity;
    const Apolarity ap = apolarity(stat);
    st["apolarity_tau"] = vec_json(ap.tau);
    st["apolarity_e"] = vec_json(ap.e);
    ordered_json fits = ordered_json::array();
    for (double a : {-1.0, 0.0, 1.0}) {
      const ConstantCurvatureFit fit = constant_curvature_fit(stat, a);
      fits.push_back({{"alpha", round_sig(a)},
                      {"k", round_sig(fit.k)},
                      {"residual", round_sig(fit.residual)}});
    }
    st["constant_curvature"] = std::move(fits);
    const double flat_defect =
        curvature(alg, statistical_connection(stat, 1.0)).max_abs();
    st["hessian_flat"] = flat_defect <= spec.tolerances.hessian_flat;
    if (flat_defect <= spec.tolerances.hessian_flat) {
      const HessianCurvature hess = hessian_curvature(stat, spec.tolerances.hessian_flat);
      ordered_json h = ordered_json::array();
      for (const auto& b : hess.h) h.push_back(bilinear_json(b));
      st["hessian"] = std::move(h);
    }
    report["statistical"] = std::move(st);
  }

  if (options.classify) {
    const SolutionSpace space = kernel(build_system(alg, ip));
    if (space.rank_ambiguous)
      throw NumericError("classification: rank ambiguous near threshold " +
                         std::to_string(space.rank_threshold));
    ordered_json cl;
    cl["kernel_dim"] = space.dim;
    cl["class_label"] = algebra_class_label(alg, ip);
    cl["rank_threshold"] = round_sig(space.rank_threshold);
    ordered_json triples = ordered_json::array();
    for (const auto& t : CubicForm::triples(n)) triples.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    cl["component_triples"] = std::move(triples);
    ordered_json basis = ordered_json::array();
    for (const auto& b : space.basis) basis.push_back(vec_json(b.components()));
    cl["basis"] = std::move(basis);
    report["classification"] = std::move(cl);
  }
  return report;
}

namespace {

std::string num6(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v.get<double>());
  return buf;
}

std::string vec_text(const json& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += num6(v[i]);
  }
  return out + ")";
}

void bilinear_text(std::ostringstream& os, const std::string& symbol, const json& table) {
  const size_t n = table.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      os << "  " << symbol << "(e" << i + 1 << ",e" << j + 1 << ") = " << vec_text(table[i][j])
         << "\n";
}

}  // namespace

std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  const auto& alg = report["algebra"];
  os << "algebra: dim " << alg["dim"].get<int>() << ", jacobi defect "
     << num6(alg["jacobi_defect"]) << ", unimodular " << num6(alg["unimodular"])
     << " (kernel dim " << alg["unimodular_kernel_dim"].get<int>() << ")\n";

  const auto& geo = report["geometry"];
  os << "\nU-map:\n";
  bilinear_text(os, "U", geo["u_map"]);
  os << "\nLevi-Civita connection:\n";
  bilinear_text(os, "LC", geo["levi_civita"]);
  os << "\nRicci:\n";
  for (const auto& row : geo["ricci"]) os << "  " << vec_text(row) << "\n";
  os << "scalar curvature: " << num6(geo["scalar_curvature"]) << "\n";
  os << "sectional curvatures:\n";
  for (const auto& s : geo["sectional"])
    os << "  K(e" << s[0].get<int>() << ",e" << s[1].get<int>() << ") = " << num6(s[2]) << "\n";

  if (report.contains("statistical")) {
    const auto& st = report["statistical"];
    os << "\nstatistical structure:\n";
    os << "  is statistical: " << num6(st["is_statistical"]) << " (defect "
       << num6(st["statistical_defect"]) << ")\n";
    os << "  conjugate symmetry defect: " << num6(st["conjugate_symmetry_defect"]);
    if (!st["sectional_well_defined"].get<bool>())
      os << "  [sectional curvature not frame-invariant]";
    os << "\n";
    os << "  apolarity tau = " << vec_text(st["apolarity_tau"]) << ", E = "
       << vec_text(st["apolarity_e"]) << "\n";
    os << "  skewness:\n";
    bilinear_text(os, "  K", st["skewness"]);
    os << "  constant-curvature fits:\n";
    for (const auto& f : st["constant_curvature"])
      os << "    alpha " << num6(f["alpha"]) << ": k = " << num6(f["k"]) << " (residual "
         << num6(f["residual"]) << ")\n";
  }

  if (report.contains("classification")) {
    const auto& cl = report["classification"];
    os << "\nclassification:\n";
    os << "  class " << cl["class_label"].get<std::string>() << ", kernel dim "
       << cl["kernel_dim"].get<int>() << " (rank threshold " << num6(cl["rank_threshold"])
       << ")\n";
    for (const auto& b : cl["basis"]) os << "  basis " << vec_text(b) << "\n";
  }
  return os.str();
}

std::string render_json(const ordered_json& report) { return report.dump(2) + "\n"; }

}  // namespace liestat
