// stosc: spectra of the non-Hermitian 2D quartic oscillator H0 + i*lambda*W.
//
// Subcommands:
//   table0    reference table of H0 levels (oracle vs 2D diagonalization)
//   sweep     eigenvalue branches over a lambda grid, with EP summary
//   ep        refine one exceptional point by bisection
//   validate  cross-check basis diagonalization against the grid method
//   c4v-demo  symmetry-breaking demo on the square (alpha_x = alpha_y)

#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stosc/eigensolver.hpp"
#include "stosc/hamiltonian2d.hpp"
#include "stosc/oracle1d.hpp"
#include "stosc/pseudospectral.hpp"
#include "stosc/sweep.hpp"
#include "stosc/symmetry.hpp"

using json = nlohmann::ordered_json;
using namespace stosc;

namespace {

constexpr const char* kVersion = "stosc 1.0.0";

// Shortest decimal representation that round-trips the double.
std::string fmt(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

struct Options {
  double alpha_x = 1.0;
  double alpha_y = std::sqrt(2.0);
  std::string perturbation = "xy";
  int basis_size = 0;  // 0 means the subcommand default
  double basis_scale_x = 0.0;  // 0 means tuned from alpha
  double basis_scale_y = 0.0;
  int grid_n = 54;
  double grid_l = 6.0;
  double lambda_start = 0.0;
  double lambda_end = 4.0;
  int lambda_steps = 201;
  int levels = 8;
  double reality_eps = 1e-8;
  std::string format = "csv";
  std::string out;

  ProductBasis basis(int default_size) const {
    const int n = basis_size > 0 ? basis_size : default_size;
    ProductBasis b = ProductBasis::tuned(n, n, alpha_x, alpha_y);
    if (basis_scale_x > 0.0) b.x.scale = basis_scale_x;
    if (basis_scale_y > 0.0) b.y.scale = basis_scale_y;
    return b;
  }
};

void add_shared_flags(CLI::App* cmd, Options& o) {
  cmd->fallthrough();  // lets a trailing --config reach the main app
  cmd->add_option("--alpha-x", o.alpha_x, "quartic coefficient on x");
  cmd->add_option("--alpha-y", o.alpha_y, "quartic coefficient on y");
  cmd->add_option("--perturbation", o.perturbation, "xy | x2y | xy2 | x2y+xy2")
      ->check(CLI::IsMember({"xy", "x2y", "xy2", "x2y+xy2"}));
  cmd->add_option("--basis-size", o.basis_size, "HO functions per axis");
  cmd->add_option("--basis-scale-x", o.basis_scale_x, "override tuned x scale");
  cmd->add_option("--basis-scale-y", o.basis_scale_y, "override tuned y scale");
  cmd->add_option("--grid-n", o.grid_n, "grid points per axis");
  cmd->add_option("--grid-l", o.grid_l, "grid half width");
  cmd->add_option("--lambda-start", o.lambda_start);
  cmd->add_option("--lambda-end", o.lambda_end);
  cmd->add_option("--lambda-steps", o.lambda_steps);
  cmd->add_option("--levels", o.levels, "number of tracked levels / rows");
  cmd->add_option("--reality-eps", o.reality_eps, "reality classification eps");
  cmd->add_option("--format", o.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out, "output path (stdout when absent)");
}

// Flat key/value provenance block shared by both output formats.
using Meta = std::vector<std::pair<std::string, std::string>>;

Meta base_meta(const std::string& subcommand, const Options& o) {
  return {{"version", kVersion},
          {"subcommand", subcommand},
          {"alpha_x", fmt(o.alpha_x)},
          {"alpha_y", fmt(o.alpha_y)}};
}

struct Table {
  Meta meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_table(const Table& t, const Options& o) {
  std::ostringstream s;
  if (o.format == "csv") {
    for (const auto& [k, v] : t.meta) s << "# " << k << " = " << v << "\n";
    for (size_t c = 0; c < t.columns.size(); ++c)
      s << t.columns[c] << (c + 1 < t.columns.size() ? "," : "\n");
    for (const auto& row : t.rows)
      for (size_t c = 0; c < row.size(); ++c)
        s << row[c] << (c + 1 < row.size() ? "," : "\n");
  } else {
    json j;
    j["meta"] = json::object();
    for (const auto& [k, v] : t.meta) j["meta"][k] = v;
    j["data"] = json::array();
    for (const auto& row : t.rows) {
      json r = json::object();
      for (size_t c = 0; c < row.size(); ++c) r[t.columns[c]] = row[c];
      j["data"].push_back(r);
    }
    s << j.dump(2) << "\n";
  }
  if (o.out.empty()) {
    std::cout << s.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open output file: " + o.out);
    f << s.str();
  }
}

int cmd_table0(const Options& o, double tol) {
  const int rows = o.levels;
  const ProductBasis basis = o.basis(60);
  // enough 1D levels so that completeness of the composed list is provable
  const int levels_1d = std::max(7, rows / 2 + 2);
  const auto ex = quartic_levels(o.alpha_x, levels_1d, 16);
  const auto ey = quartic_levels(o.alpha_y, levels_1d, 16);
  const auto table = compose_separable(ex, ey, rows);
  const auto dm = h0_spectrum_blocked({o.alpha_x, o.alpha_y}, basis);

  Table t;
  t.meta = base_meta("table0", o);
  t.meta.push_back({"method", "oracle1d + basis_dm"});
  t.meta.push_back({"basis_size", std::to_string(basis.x.size)});
  t.meta.push_back({"basis_scale_x", fmt(basis.x.scale)});
  t.meta.push_back({"basis_scale_y", fmt(basis.y.scale)});
  t.meta.push_back({"tolerance", fmt(tol)});
  t.columns = {"n_x", "n_y", "energy", "ci", "d2h", "dm_energy", "abs_error"};

  double max_err = 0.0;
  for (int i = 0; i < rows; ++i) {
    const double err = std::abs(dm[i] - table[i].energy);
    max_err = std::max(max_err, err);
    t.rows.push_back({std::to_string(table[i].index.nx),
                      std::to_string(table[i].index.ny), table[i].digits,
                      table[i].ci.label, table[i].d2h.label, fmt(dm[i]),
                      fmt(err)});
  }
  t.meta.push_back({"max_abs_error", fmt(max_err)});
  t.meta.push_back({"pass", max_err <= tol ? "true" : "false"});
  write_table(t, o);
  return max_err <= tol ? 0 : 1;
}

int cmd_validate(const Options& o, const std::vector<double>& lambdas,
                 double tol, double oracle_tol) {
  const ProductBasis basis = o.basis(40);
  const Grid2D grid{o.grid_l, o.grid_n};

  Table t;
  t.meta = base_meta("validate", o);
  t.meta.push_back({"perturbation", o.perturbation});
  t.meta.push_back({"method", "basis_dm vs pseudospectral"});
  t.meta.push_back({"basis_size", std::to_string(basis.x.size)});
  t.meta.push_back({"grid_n", std::to_string(grid.points_per_axis)});
  t.meta.push_back({"grid_l", fmt(grid.half_width)});
  t.meta.push_back({"levels", std::to_string(o.levels)});
  t.meta.push_back({"tolerance", fmt(tol)});
  t.columns = {"lambda", "max_distance", "pass"};

  bool all_pass = true;
  for (double lam : lambdas) {
    ModelParams p{o.alpha_x, o.alpha_y, parse_perturbation(o.perturbation), lam};
    const CrossValidationReport r = cross_validate(p, basis, grid, o.levels, tol);
    all_pass = all_pass && r.pass;
    t.rows.push_back({fmt(lam), fmt(r.max_distance), r.pass ? "true" : "false"});

    if (lam == 0.0) {
      // at lambda = 0 the DM values must also hit the certified separable sums
      const int levels_1d = std::max(7, o.levels / 2 + 2);
      const auto table =
          compose_separable(quartic_levels(o.alpha_x, levels_1d, 16),
                            quartic_levels(o.alpha_y, levels_1d, 16), o.levels);
      double err = 0.0;
      for (int i = 0; i < o.levels; ++i)
        err = std::max(err, std::abs(r.dm_values[i].real() - table[i].energy));
      all_pass = all_pass && err <= oracle_tol;
      t.meta.push_back({"oracle_max_abs_error", fmt(err)});
      t.meta.push_back({"oracle_tolerance", fmt(oracle_tol)});
    }
  }
  t.meta.push_back({"pass", all_pass ? "true" : "false"});
  write_table(t, o);
  return all_pass ? 0 : 1;
}

int cmd_sweep(const Options& o) {
  const ProductBasis basis = o.basis(24);
  const Grid2D grid{o.grid_l, o.grid_n};
  ModelParams p{o.alpha_x, o.alpha_y, parse_perturbation(o.perturbation), 0.0};
  const Method method = Method::BASIS_DM;
  const SweepContext ctx = make_context(p, method, basis, grid);

  SweepConfig cfg;
  cfg.lambda_start = o.lambda_start;
  cfg.lambda_end = o.lambda_end;
  cfg.steps = o.lambda_steps;
  cfg.tracked_levels = o.levels;
  cfg.method = method;
  cfg.reality_eps = o.reality_eps;
  cfg.validate();

  const auto branches = run_sweep(cfg, ctx);

  Meta meta = base_meta("sweep", o);
  meta.push_back({"perturbation", o.perturbation});
  meta.push_back({"method", "basis_dm"});
  meta.push_back({"basis_size", std::to_string(basis.x.size)});
  meta.push_back({"basis_scale_x", fmt(basis.x.scale)});
  meta.push_back({"basis_scale_y", fmt(basis.y.scale)});
  meta.push_back({"lambda_start", fmt(cfg.lambda_start)});
  meta.push_back({"lambda_end", fmt(cfg.lambda_end)});
  meta.push_back({"lambda_steps", std::to_string(cfg.steps)});
  meta.push_back({"reality_eps", fmt(cfg.reality_eps)});

  // one data table per branch
  for (size_t bi = 0; bi < branches.size(); ++bi) {
    const Branch& br = branches[bi];
    Table t;
    t.meta = meta;
    t.meta.push_back({"branch", std::to_string(bi)});
    t.meta.push_back({"parent_nx", std::to_string(br.parent.nx)});
    t.meta.push_back({"parent_ny", std::to_string(br.parent.ny)});
    t.meta.push_back({"ancestry_ci", br.ancestry_ci.label});
    t.meta.push_back({"ancestry_d2h", br.ancestry_d2h.label});
    for (const auto& w : br.warnings) t.meta.push_back({"warning", w});
    t.columns = {"lambda", "re_energy", "im_energy", "ancestry", "ci_purity",
                 "overlap_with_prev"};
    for (const auto& pt : br.points)
      t.rows.push_back({fmt(pt.lambda), fmt(pt.energy.real()),
                        fmt(pt.energy.imag()),
                        br.ancestry_ci.label + "(" +
                            std::to_string(br.parent.nx) + "," +
                            std::to_string(br.parent.ny) + ")",
                        fmt(pt.ci_purity), fmt(pt.overlap_with_prev)});
    Options oo = o;
    if (!o.out.empty()) {
      const std::string ext = o.format == "csv" ? ".csv" : ".json";
      oo.out = o.out + "_branch" + std::to_string(bi) + ext;
    }
    write_table(t, oo);
  }

  // summary: coalescing pairs with refined EPs and transition counts
  Table s;
  s.meta = meta;
  s.columns = {"branch_a", "branch_b", "transitions", "ep_lambda_low",
               "ep_lambda_high"};
  for (const auto& [a, b] : coalescing_pairs(branches, cfg.reality_eps)) {
    const TransitionCount tc = count_phase_transitions(
        branches[a], branches[b], ctx.build, 1e-10, cfg.reality_eps);
    std::string lo = "-", hi = "-";
    if (!tc.transitions.empty()) {
      lo = fmt(tc.transitions.front().lambda_low);
      hi = fmt(tc.transitions.front().lambda_high);
    }
    s.rows.push_back({std::to_string(a), std::to_string(b),
                      std::to_string(tc.count), lo, hi});
  }
  Options oo = o;
  if (!o.out.empty())
    oo.out = o.out + "_summary" + (o.format == "csv" ? std::string(".csv")
                                                     : std::string(".json"));
  write_table(s, oo);
  return 0;
}

int cmd_ep(const Options& o, double pair_re, double pair_im, double ep_tol) {
  const ProductBasis basis = o.basis(24);
  const Perturbation w = parse_perturbation(o.perturbation);
  const MatrixBuilder build = [&](double lam) {
    return build_h({o.alpha_x, o.alpha_y, w, lam}, basis);
  };
  const ExceptionalPoint ep = find_exceptional_point(
      build, {pair_re, pair_im}, o.lambda_start, o.lambda_end, ep_tol,
      o.reality_eps);

  Table t;
  t.meta = base_meta("ep", o);
  t.meta.push_back({"perturbation", o.perturbation});
  t.meta.push_back({"method", "basis_dm"});
  t.meta.push_back({"basis_size", std::to_string(basis.x.size)});
  t.meta.push_back({"pair_ref_re", fmt(pair_re)});
  t.meta.push_back({"pair_ref_im", fmt(pair_im)});
  t.meta.push_back({"bracket_tol", fmt(ep_tol)});
  t.meta.push_back({"reality_eps", fmt(o.reality_eps)});
  t.columns = {"lambda_low", "lambda_high", "width", "iterations"};
  t.rows.push_back({fmt(ep.lambda_low), fmt(ep.lambda_high),
                    fmt(ep.lambda_high - ep.lambda_low),
                    std::to_string(ep.bracket_widths.size())});
  write_table(t, o);
  return 0;
}

int cmd_c4v_demo(const Options& o, double lambda, double im_threshold) {
  const ProductBasis basis = o.basis(34);
  ModelParams p{o.alpha_x, o.alpha_y, parse_perturbation(o.perturbation), lambda};

  const Spectrum s0 = eig_symmetric(build_h0(p, basis));
  const auto doublets = c4v_degenerate_pairs(s0, basis, 1e-8);
  std::vector<int> in_doublet(o.levels, 0);
  for (const auto& [i, j] : doublets) {
    if (i < o.levels) in_doublet[i] = 1;
    if (j < o.levels) in_doublet[j] = 1;
  }

  const Spectrum s = eig_general(build_h(p, basis));

  Table t;
  t.meta = base_meta("c4v-demo", o);
  t.meta.push_back({"perturbation", o.perturbation});
  t.meta.push_back({"method", "basis_dm"});
  t.meta.push_back({"basis_size", std::to_string(basis.x.size)});
  t.meta.push_back({"lambda", fmt(lambda)});
  t.meta.push_back({"im_threshold", fmt(im_threshold)});
  t.columns = {"level", "re_energy", "im_energy", "doublet_member", "complex"};

  bool ok = true;
  for (int i = 0; i < o.levels; ++i) {
    const bool complex_now = std::abs(s.eigenvalues[i].imag()) > im_threshold;
    if (in_doublet[i] && !complex_now) ok = false;
    t.rows.push_back({std::to_string(i), fmt(s.eigenvalues[i].real()),
                      fmt(s.eigenvalues[i].imag()),
                      in_doublet[i] ? "true" : "false",
                      complex_now ? "true" : "false"});
  }
  t.meta.push_back({"pass", ok ? "true" : "false"});
  write_table(t, o);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-Hermitian 2D quartic oscillator spectra"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value config file with subcommand sections");
  app.set_version_flag("--version", kVersion);

  Options o;
  double tol = 1e-10;
  double oracle_tol = 1e-10;
  std::vector<double> lambdas{0.0, 0.1, 0.5};
  double pair_re = 0.0, pair_im = 0.0, ep_tol = 1e-7;
  double demo_lambda = 0.01, im_threshold = 1e-6;

  CLI::App* table0 = app.add_subcommand("table0", "reference H0 level table");
  add_shared_flags(table0, o);
  table0->add_option("--tol", tol, "max |dm - oracle| per row");

  CLI::App* validate = app.add_subcommand("validate", "cross-method check");
  add_shared_flags(validate, o);
  validate->add_option("--lambdas", lambdas, "couplings to check");
  validate->add_option("--tol", tol, "cross-method tolerance");
  validate->add_option("--oracle-tol", oracle_tol, "lambda=0 oracle tolerance");

  CLI::App* sweep = app.add_subcommand("sweep", "branch continuation in lambda");
  add_shared_flags(sweep, o);

  CLI::App* ep = app.add_subcommand("ep", "bisect one exceptional point");
  add_shared_flags(ep, o);
  ep->add_option("--pair-re", pair_re, "Re of the target pair")->required();
  ep->add_option("--pair-im", pair_im, "Im of the target pair");
  ep->add_option("--ep-tol", ep_tol, "final bracket width");

  CLI::App* demo = app.add_subcommand("c4v-demo", "square-symmetry fragility");
  add_shared_flags(demo, o);
  demo->add_option("--lambda", demo_lambda, "coupling for the demo");
  demo->add_option("--im-threshold", im_threshold, "complex detection cut");

  CLI11_PARSE(app, argc, argv);

  try {
    if (table0->parsed()) {
      // table0 lists the full 23-row reference table by default
      if (table0->get_option("--levels")->count() == 0) o.levels = 23;
      return cmd_table0(o, tol);
    }
    if (validate->parsed()) {
      if (validate->get_option("--tol")->count() == 0) tol = 1e-8;
      return cmd_validate(o, lambdas, tol, oracle_tol);
    }
    if (sweep->parsed()) return cmd_sweep(o);
    if (ep->parsed()) return cmd_ep(o, pair_re, pair_im, ep_tol);
    if (demo->parsed()) {
      // square potential by default; an explicit --alpha-y wins
      if (demo->get_option("--alpha-y")->count() == 0) o.alpha_y = o.alpha_x;
      return cmd_c4v_demo(o, demo_lambda, im_threshold);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
