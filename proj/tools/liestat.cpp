#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liestat/classify.hpp"
#include "liestat/connection.hpp"
#include "liestat/errors.hpp"
#include "liestat/models.hpp"
#include "liestat/report.hpp"
#include "liestat/statistical.hpp"

namespace {

using liestat::round_sig;
using nlohmann::ordered_json;

constexpr int kExitInput = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumeric = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw liestat::ParseError("cannot open output file: " + out_path);
  out << text;
}

std::vector<double> parse_grid(const std::string& range) {
  double lo = 0, hi = 0, step = 0;
  if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0 || hi < lo)
    throw liestat::ParseError("grid: expected lo:hi:step with step > 0, got '" + range + "'");
  std::vector<double> values;
  for (double v = lo; v <= hi + 1e-12 * step; v += step) values.push_back(round_sig(v));
  return values;
}

std::string basis_text(const liestat::SolutionSpace& space) {
  std::string out;
  for (const auto& b : space.basis) {
    out += "  basis (";
    for (int i = 0; i < b.components().size(); ++i) {
      if (i) out += ", ";
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", b.components()(i));
      out += buf;
    }
    out += ")\n";
  }
  return out;
}

ordered_json basis_json(const liestat::SolutionSpace& space) {
  ordered_json basis = ordered_json::array();
  for (const auto& b : space.basis) {
    ordered_json vec = ordered_json::array();
    for (int i = 0; i < b.components().size(); ++i) vec.push_back(round_sig(b.components()(i)));
    basis.push_back(vec);
  }
  return basis;
}

void require_unambiguous(const liestat::SolutionSpace& space) {
  if (space.rank_ambiguous)
    throw liestat::NumericError("classification: rank ambiguous near threshold " +
                                std::to_string(space.rank_threshold));
}

int run_report(const std::string& spec_path, bool as_json, bool classify,
               const std::string& out_path) {
  const liestat::GroupSpec spec = liestat::load_group_spec(spec_path);
  liestat::ReportOptions options;
  options.classify = classify;
  const ordered_json report = liestat::build_report(spec, options);
  emit(as_json ? liestat::render_json(report) : liestat::render_text(report), out_path);
  return 0;
}

int run_classify(const std::optional<std::vector<double>>& milnor_c,
                 const std::optional<double>& xi, const std::optional<double>& eta,
                 bool milnor_family, bool nonuni_family, bool do_sweep,
                 const std::vector<std::string>& grids, bool show_basis, bool as_json) {
  std::vector<liestat::SweepRow> rows;
  if (do_sweep || !grids.empty()) {  // a grid implies a sweep
    const std::string family = milnor_family ? "milnor" : nonuni_family ? "nonuni" : "";
    if (family.empty())
      throw liestat::ParseError("classify --sweep: choose --milnor or --nonunimodular");
    if (grids.empty()) throw liestat::ParseError("classify --sweep: --grid required");
    const size_t arity = family == "milnor" ? 3 : 2;
    std::vector<std::vector<double>> axes;
    if (grids.size() == 1)
      axes.assign(arity, parse_grid(grids[0]));
    else if (grids.size() == arity)
      for (const auto& g : grids) axes.push_back(parse_grid(g));
    else
      throw liestat::ParseError("classify --sweep: give one --grid or one per parameter");
    rows = liestat::sweep(family, axes);
  } else if (milnor_family) {
    if (!milnor_c || milnor_c->size() != 3)
      throw liestat::ParseError("classify --milnor: needs --c C1 C2 C3");
    liestat::SweepRow row;
    row.params = *milnor_c;
    liestat::Classification c =
        liestat::classify_unimodular((*milnor_c)[0], (*milnor_c)[1], (*milnor_c)[2]);
    require_unambiguous(c.space);
    row.dim = c.space.dim;
    row.label = c.label;
    rows.push_back(row);
  } else if (nonuni_family) {
    if (!xi || !eta) throw liestat::ParseError("classify --nonunimodular: needs --xi and --eta");
    liestat::SweepRow row;
    row.params = {*xi, *eta};
    liestat::Classification c = liestat::classify_nonunimodular(*xi, *eta);
    require_unambiguous(c.space);
    row.dim = c.space.dim;
    row.label = c.label;
    rows.push_back(row);
  } else {
    throw liestat::ParseError("classify: choose --milnor, --nonunimodular or --sweep");
  }

  if (as_json) {
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      ordered_json params = ordered_json::array();
      for (double p : row.params) params.push_back(round_sig(p));
      r["params"] = params;
      if (!row.error.empty()) {
        r["error"] = row.error;
      } else {
        r["dim"] = row.dim;
        r["label"] = row.label;
        if (show_basis) {
          liestat::Classification c =
              row.params.size() == 3
                  ? liestat::classify_unimodular(row.params[0], row.params[1], row.params[2])
                  : liestat::classify_nonunimodular(row.params[0], row.params[1]);
          r["basis"] = basis_json(c.space);
        }
      }
      out.push_back(r);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  for (const auto& row : rows) {
    std::string line;
    for (double p : row.params) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g ", p);
      line += buf;
    }
    if (!row.error.empty()) {
      std::cout << line << " error: " << row.error << "\n";
      continue;
    }
    std::cout << line << " dim " << row.dim << "  " << row.label << "\n";
    if (show_basis) {
      liestat::Classification c =
          row.params.size() == 3
              ? liestat::classify_unimodular(row.params[0], row.params[1], row.params[2])
              : liestat::classify_nonunimodular(row.params[0], row.params[1]);
      std::cout << basis_text(c.space);
    }
  }
  return 0;
}

int run_models(const std::string& which, double nu, double alpha, bool as_json) {
  const bool is_t = which == "t";
  if (is_t && nu <= 0) throw liestat::ParseError("models t: --nu must be positive");

  const liestat::StatisticalStructure stat =
      is_t ? liestat::t_structure(nu) : liestat::normal_structure();
  const liestat::FrameScales scales = is_t ? liestat::frame_scales(liestat::TModel{nu})
                                           : liestat::frame_scales(liestat::NormalModel{});
  const Eigen::Matrix2d coord =
      is_t ? liestat::coordinate_metric(liestat::TModel{nu}, 0.0, 1.0)
           : liestat::coordinate_metric(liestat::NormalModel{}, 0.0, 1.0);
  const liestat::ConstantCurvatureFit fit = liestat::constant_curvature_fit(stat, alpha);
  const double conj = liestat::conjugate_symmetry_defect(stat);
  const bool flat = std::abs(fit.k) <= 1e-10 && fit.residual <= 1e-9;
  const liestat::CurvaturePair pair = liestat::curvature_pair(stat, alpha);

  if (as_json) {
    ordered_json out;
    out["model"] = which;
    if (is_t) out["nu"] = round_sig(nu);
    out["alpha"] = round_sig(alpha);
    out["frame"] = {{"nu1", round_sig(scales.nu1)}, {"nu2", round_sig(scales.nu2)}};
    out["coordinate_metric_at_0_1"] = {{round_sig(coord(0, 0)), round_sig(coord(0, 1))},
                                       {round_sig(coord(1, 0)), round_sig(coord(1, 1))}};
    ordered_json conn = ordered_json::array();
    const liestat::Connection nabla = liestat::statistical_connection(stat, alpha);
    for (int i = 0; i < 2; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < 2; ++j) {
        ordered_json v = ordered_json::array();
        for (int k = 0; k < 2; ++k) v.push_back(round_sig(nabla.op(i)(k, j)));
        row.push_back(v);
      }
      conn.push_back(row);
    }
    out["alpha_connection"] = conn;
    out["curvature_constant"] = round_sig(fit.k);
    out["curvature_residual"] = round_sig(fit.residual);
    out["flat"] = flat;
    out["curvature_max_abs"] = round_sig(pair.r.max_abs());
    out["dual_curvature_max_abs"] = round_sig(pair.r_dual.max_abs());
    if (is_t && nu != 1) out["flat_alpha"] = round_sig(liestat::flat_alpha(nu));
    out["conjugate_symmetry_defect"] = round_sig(conj);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::printf("model %s%s, alpha = %.6g\n", which.c_str(),
              is_t ? (" (nu = " + std::to_string(nu) + ")").c_str() : "", alpha);
  std::printf("frame scales: nu1 = %.6g, nu2 = %.6g\n", scales.nu1, scales.nu2);
  std::printf("coordinate metric at (0,1): diag(%.6g, %.6g)\n", coord(0, 0), coord(1, 1));
  const liestat::Connection nabla = liestat::statistical_connection(stat, alpha);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      std::printf("nabla(e%d)e%d = (%.6g, %.6g)\n", i + 1, j + 1, nabla.op(i)(0, j),
                  nabla.op(i)(1, j));
  std::printf("curvature constant k = %.6g (residual %.6g)%s\n", fit.k, fit.residual,
              flat ? "  [flat]" : "");
  std::printf("R max-abs = %.6g, R* max-abs = %.6g\n", pair.r.max_abs(), pair.r_dual.max_abs());
  if (is_t && nu != 1) std::printf("flat alpha = %.6g\n", liestat::flat_alpha(nu));
  std::printf("conjugate symmetry defect = %.6g\n", conj);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"left-invariant statistical geometry on Lie groups"};
  app.require_subcommand(1);

  auto* report = app.add_subcommand("report", "geometry report for a group spec file");
  std::string spec_path, out_path;
  bool report_json = false, report_classify = false;
  report->add_option("spec", spec_path, "path to a JSON group spec")->required();
  report->add_flag("--json", report_json, "machine-readable output");
  report->add_flag("--classify", report_classify, "append the conjugate-symmetry kernel");
  report->add_option("--out", out_path, "write to a file instead of stdout");

  auto* classify = app.add_subcommand("classify", "conjugate-symmetric structure kernels");
  bool milnor_family = false, nonuni_family = false, do_sweep = false;
  bool show_basis = false, classify_json = false;
  std::vector<double> milnor_c;
  double xi = -1, eta = -1;
  bool have_xi = false, have_eta = false;
  std::vector<std::string> grids;
  classify->add_flag("--milnor", milnor_family, "unimodular Milnor frame family");
  classify->add_flag("--nonunimodular", nonuni_family, "normalized non-unimodular family");
  classify->add_flag("--sweep", do_sweep, "sweep a parameter grid");
  classify->add_option("--c", milnor_c, "Milnor constants c1 c2 c3")->expected(3);
  classify->add_option("--xi", xi, "xi >= 0")->each([&](const std::string&) { have_xi = true; });
  classify->add_option("--eta", eta, "eta >= 0")->each([&](const std::string&) { have_eta = true; });
  classify->add_option("--grid", grids, "lo:hi:step (repeat for per-axis ranges)");
  classify->add_flag("--show-basis", show_basis, "print kernel basis vectors");
  classify->add_flag("--json", classify_json, "machine-readable output");

  auto* models = app.add_subcommand("models", "normal / Student-t model reports");
  std::string which;
  double nu = 5.0, alpha = 0.0;
  bool models_json = false;
  models->add_option("family", which, "normal | t")->required()
      ->check(CLI::IsMember({"normal", "t"}));
  models->add_option("--nu", nu, "degrees of freedom (t model)");
  models->add_option("--alpha", alpha, "alpha-connection parameter");
  models->add_flag("--json", models_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return kExitInput;
  }

  try {
    if (report->parsed()) return run_report(spec_path, report_json, report_classify, out_path);
    if (classify->parsed())
      return run_classify(milnor_c.empty() ? std::nullopt : std::make_optional(milnor_c),
                          have_xi ? std::make_optional(xi) : std::nullopt,
                          have_eta ? std::make_optional(eta) : std::nullopt, milnor_family,
                          nonuni_family, do_sweep, grids, show_basis, classify_json);
    if (models->parsed()) return run_models(which, nu, alpha, models_json);
  } catch (const liestat::ParseError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitInput;
  } catch (const liestat::ValidationError& err) {
    std::cerr << "validation error: " << err.what() << "\n";
    return kExitValidation;
  } catch (const liestat::NumericError& err) {
    std::cerr << "numeric error: " << err.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
