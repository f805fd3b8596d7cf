// nhchain command-line tool: runs each module end-to-end from a JSON config
// and writes deterministic CSV/JSON artifacts (optional SVG plots).
#include "nhchain/acceptance.hpp"
#include "nhchain/dense.hpp"
#include "nhchain/greens.hpp"
#include "nhchain/io.hpp"
#include "nhchain/model.hpp"
#include "nhchain/phase.hpp"
#include "nhchain/skin.hpp"
#include "nhchain/winding.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace nhchain;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::string format = "both";
  bool svg = false;
  int jobs = 1;
  bool quick = false;
};

void add_common(CLI::App* sub, CommonOpts& c, bool config_required = true) {
  auto* opt = sub->add_option("--config", c.config_path, "JSON config file");
  if (config_required) opt->required();
  sub->add_option("--out", c.out_dir, "output directory (created if missing)");
  sub->add_option("--format", c.format, "csv | json | both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  sub->add_flag("--svg", c.svg, "also write an SVG plot");
  sub->add_option("--jobs", c.jobs, "worker hint (output is deterministic regardless)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--quick", c.quick, "reduced problem sizes");
}

void emit(const CommonOpts& c, const std::string& stem, const ResultEnvelope& env,
          const CsvTable& table) {
  fs::create_directories(c.out_dir);
  const std::string base = (fs::path(c.out_dir) / stem).string();
  if (c.format == "json" || c.format == "both") write_text_file(base + ".json", env.serialize());
  if (c.format == "csv" || c.format == "both") write_text_file(base + ".csv", table.serialize());
}

void emit_extra_csv(const CommonOpts& c, const std::string& stem, const CsvTable& table) {
  if (c.format == "json") return;
  fs::create_directories(c.out_dir);
  write_text_file((fs::path(c.out_dir) / (stem + ".csv")).string(), table.serialize());
}

void emit_svg(const CommonOpts& c, const std::string& stem, const std::string& svg) {
  fs::create_directories(c.out_dir);
  write_text_file((fs::path(c.out_dir) / (stem + ".svg")).string(), svg);
}

ResultEnvelope envelope(const RunConfig& cfg, const std::string& command) {
  ResultEnvelope env;
  env.command = command;
  env.config = {{"model", params_to_json(cfg.params)}, {"options", cfg.options}, {"seed", cfg.seed}};
  return env;
}

double opt_num(const json& o, const char* key, double fallback) {
  return o.contains(key) ? o.at(key).get<double>() : fallback;
}

// ---- spectrum -----------------------------------------------------------

int cmd_spectrum(const CommonOpts& c) {
  RunConfig cfg = load_config_file(c.config_path, {"heatmap"});
  ModelParams p = cfg.params;
  if (c.quick) p.N = std::min(p.N, 40);
  const Matrix H = build_obc_hamiltonian(p);
  const EigenDecomposition dec = eig(H);

  ResultEnvelope env = envelope(cfg, "spectrum");
  CsvTable table{{"index", "Re_E", "Im_E", "residual"}, {}};
  json rows = json::array();
  for (int i = 0; i < dec.eigenvalues.size(); ++i) {
    const cplx e = dec.eigenvalues(i);
    const double res = (H * dec.right_eigenvectors.col(i) - e * dec.right_eigenvectors.col(i)).norm();
    table.add_row({std::to_string(i + 1), format_double(e.real()), format_double(e.imag()),
                   format_double(res)});
    rows.push_back({{"index", i + 1}, {"Re_E", e.real()}, {"Im_E", e.imag()}, {"residual", res}});
  }
  env.payload = {{"eigenvalues", rows}, {"max_residual", dec.max_residual}};
  if (dec.defective) env.diagnostics.push_back("eigenvector basis numerically rank-deficient");
  emit(c, "spectrum", env, table);

  const bool heatmap = cfg.options.value("heatmap", true);
  if (heatmap) {
    CsvTable hm{{"m", "n", "abs_psi"}, {}};
    std::vector<std::vector<double>> grid(dec.eigenvalues.size(),
                                          std::vector<double>(2 * p.N, 0.0));
    for (int m = 0; m < dec.eigenvalues.size(); ++m)
      for (int n = 0; n < 2 * p.N; ++n) {
        const double a = std::abs(dec.right_eigenvectors(n, m));
        grid[m][n] = a;
        hm.add_row({std::to_string(m + 1), std::to_string(n + 1), format_double(a)});
      }
    emit_extra_csv(c, "spectrum_states", hm);
    if (c.svg) emit_svg(c, "spectrum", svg_heatmap(grid, "eigenstate magnitudes |psi_m(n)|"));
  }
  return 0;
}

// ---- winding ------------------------------------------------------------

int cmd_winding(const CommonOpts& c) {
  RunConfig cfg = load_config_file(c.config_path, {"sweep", "lo", "hi", "steps"});
  const std::string sweep = cfg.options.value("sweep", std::string("t2"));
  const double lo = opt_num(cfg.options, "lo", 0.0);
  const double hi = opt_num(cfg.options, "hi", 0.8);
  int steps = (int)opt_num(cfg.options, "steps", 161);
  if (c.quick) steps = std::min(steps, 41);

  auto with = [&](double v) {
    ModelParams p = cfg.params;
    if (sweep == "t0") p.t0 = v;
    else if (sweep == "t1R") p.t1R = v;
    else if (sweep == "t1L") p.t1L = v;
    else if (sweep == "t2") p.t2 = v;
    else if (sweep == "eps0") p.eps0 = v;
    else throw ConfigError("winding: unknown sweep parameter '" + sweep + "'");
    return p;
  };

  ResultEnvelope env = envelope(cfg, "winding");
  CsvTable table{{sweep, "topological", "margin", "max_abs_za", "min_abs_zb", "note"}, {}};
  json rows = json::array();
  std::vector<double> xs, margins;
  for (int i = 0; i < steps; ++i) {
    const double v = lo + (hi - lo) * i / std::max(1, steps - 1);
    ModelParams p = with(v);
    std::string note;
    double margin = 0.0, za = 0.0, zb = 0.0;
    bool topo = false;
    try {
      margin = criterion_margin(p);
      topo = margin > 0.0;
      if (p.t0 != 0.0 && p.t2 != 0.0) {
        const auto r = offdiag_roots(p);
        za = std::abs(r.first[1]);
        zb = std::abs(r.second[0]);
      } else {
        note = "degenerate: radius scan";
        topo = topological_radius_scan(p);
      }
    } catch (const std::exception& e) {
      note = e.what();
    }
    table.add_row({format_double(v), topo ? "1" : "0", format_double(margin), format_double(za),
                   format_double(zb), note});
    rows.push_back({{sweep, v}, {"topological", topo}, {"margin", margin},
                    {"max_abs_za", za}, {"min_abs_zb", zb}, {"note", note}});
    xs.push_back(v);
    margins.push_back(margin);
  }
  env.payload = {{"rows", rows}};
  try {
    const double t = find_topological_transition(cfg.params, sweep, lo, hi);
    env.payload["transition"] = t;
    table.add_row({format_double(t), "", "0", "", "", "transition"});
  } catch (const NoBracketError&) {
    env.diagnostics.push_back("no sign change of the criterion margin in the sweep window");
  }
  emit(c, "winding", env, table);
  if (c.svg) emit_svg(c, "winding", svg_line_plot(xs, {margins}, {"margin"}, "criterion margin along " + sweep));
  return 0;
}

// ---- skin ---------------------------------------------------------------

int cmd_skin(const CommonOpts& c) {
  RunConfig cfg = load_config_file(c.config_path, {"samples"});
  ModelParams p = cfg.params;
  if (c.quick) p.N = std::min(p.N, 40);
  int samples = (int)opt_num(cfg.options, "samples", 512);
  if (c.quick) samples = std::min(samples, 128);

  const LocalizationProfile prof = localization_profile(p, samples);
  CsvTable curve{{"theta", "alpha", "solvable"}, {}};
  for (std::size_t i = 0; i < prof.theta.size(); ++i)
    curve.add_row({format_double(prof.theta[i]), format_double(prof.alpha[i]),
                   prof.solvable[i] ? "1" : "0"});

  const QuantizeReport rep = quantize(p);
  ResultEnvelope env = envelope(cfg, "skin");
  CsvTable modes{{"m", "theta", "alpha", "Re_E", "Im_E", "penetration_length"}, {}};
  json rows = json::array();
  for (const SkinMode& m : rep.modes) {
    modes.add_row({std::to_string(m.m), format_double(m.theta), format_double(m.alpha),
                   format_double(m.energy.real()), format_double(m.energy.imag()),
                   format_double(m.penetration_length)});
    rows.push_back({{"m", m.m}, {"theta", m.theta}, {"alpha", m.alpha},
                    {"Re_E", m.energy.real()}, {"Im_E", m.energy.imag()},
                    {"penetration_length", m.penetration_length},
                    {"hyperbolic", m.hyperbolic}, {"state_residual", m.state_residual}});
  }
  env.payload = {{"modes", rows}, {"expected_count", rep.expected_count},
                 {"found_count", rep.found_count}, {"max_abs_alpha", prof.max_abs_alpha}};
  env.diagnostics = rep.diagnostics;
  emit(c, "skin", env, modes);
  emit_extra_csv(c, "skin_alpha_curve", curve);
  if (c.svg) {
    std::vector<double> a;
    for (double v : prof.alpha) a.push_back(std::isnan(v) ? 0.0 : v);
    emit_svg(c, "skin", svg_line_plot(prof.theta, {a}, {"alpha"}, "localization exponent alpha(theta)"));
  }
  return 0;
}

// ---- greens -------------------------------------------------------------

int cmd_greens(const CommonOpts& c) {
  RunConfig cfg = load_config_file(c.config_path, {"lo", "hi", "steps", "eta"});
  const double lo = opt_num(cfg.options, "lo", 0.0);
  const double hi = opt_num(cfg.options, "hi", 0.8);
  int steps = (int)opt_num(cfg.options, "steps", 161);
  const double eta = opt_num(cfg.options, "eta", 1e-3);
  if (c.quick) steps = std::min(steps, 41);

  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = lo + (hi - lo) * i / std::max(1, steps - 1);
  const auto rows = transition_scan(cfg.params, grid, eta);

  ResultEnvelope env = envelope(cfg, "greens");
  CsvTable table{{"t2", "A_surface", "A_bulk", "ok", "error"}, {}};
  json jr = json::array();
  std::vector<double> xs, as, ab;
  for (const auto& r : rows) {
    table.add_row({format_double(r.t2), format_double(r.A_surface), format_double(r.A_bulk),
                   r.ok ? "1" : "0", r.error});
    jr.push_back({{"t2", r.t2}, {"A_surface", r.A_surface}, {"A_bulk", r.A_bulk},
                  {"ok", r.ok}, {"error", r.error}});
    if (r.ok) {
      xs.push_back(r.t2);
      as.push_back(std::max(r.A_surface, 1e-300));
      ab.push_back(std::max(r.A_bulk, 1e-300));
    } else {
      env.diagnostics.push_back("t2=" + format_double(r.t2) + ": " + r.error);
    }
  }
  env.payload = {{"rows", jr}, {"eta", eta}};
  emit(c, "greens", env, table);
  if (c.svg)
    emit_svg(c, "greens",
             svg_line_plot(xs, {as, ab}, {"A_surface", "A_bulk"},
                           "spectral functions at E = eps0", /*log_y=*/true));
  return 0;
}

// ---- phase-diagram ------------------------------------------------------

int cmd_phase_diagram(const CommonOpts& c) {
  RunConfig cfg = load_config_file(c.config_path, {"axis1", "axis2", "tie"});
  auto parse_axis = [](const json& j, const char* which) {
    if (!j.is_object()) throw ConfigError(std::string("phase-diagram: ") + which + " must be an object");
    for (auto& [k, v] : j.items())
      if (k != "name" && k != "lo" && k != "hi" && k != "steps")
        throw ConfigError(std::string("phase-diagram: unknown key '") + k + "' in " + which);
    AxisSpec a;
    a.name = j.at("name").get<std::string>();
    a.lo = j.at("lo").get<double>();
    a.hi = j.at("hi").get<double>();
    a.steps = j.at("steps").get<int>();
    return a;
  };
  if (!cfg.options.contains("axis1") || !cfg.options.contains("axis2"))
    throw ConfigError("phase-diagram: options.axis1 and options.axis2 are required");
  AxisSpec a1 = parse_axis(cfg.options.at("axis1"), "axis1");
  AxisSpec a2 = parse_axis(cfg.options.at("axis2"), "axis2");
  if (c.quick) {
    a1.steps = std::min(a1.steps, 17);
    a2.steps = std::min(a2.steps, 17);
  }
  std::optional<LinearTie> tie;
  if (cfg.options.contains("tie")) {
    const json& t = cfg.options.at("tie");
    for (auto& [k, v] : t.items())
      if (k != "target" && k != "source" && k != "offset")
        throw ConfigError("phase-diagram: unknown key '" + k + "' in tie");
    tie = LinearTie{t.at("target").get<std::string>(), t.at("source").get<std::string>(),
                    t.value("offset", 0.0)};
  }

  const auto points = diagram(cfg.params, a1, a2, tie);
  ResultEnvelope env = envelope(cfg, "phase-diagram");
  CsvTable table{{a1.name, a2.name, "phase", "topological", "skin", "skin_side", "max_abs_alpha",
                  "flag"},
                 {}};
  json rows = json::array();
  std::vector<std::vector<double>> grid(a2.steps, std::vector<double>(a1.steps, 0.0));
  auto axis_value = [](const ModelParams& p, const std::string& name) {
    if (name == "t0") return p.t0;
    if (name == "t1R") return p.t1R;
    if (name == "t1L") return p.t1L;
    if (name == "t2") return p.t2;
    return p.eps0;
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    const PhasePoint& pt = points[i];
    const double v1 = axis_value(pt.params, a1.name);
    const double v2 = axis_value(pt.params, a2.name);
    table.add_row({format_double(v1), format_double(v2), phase_name(pt.phase),
                   pt.topological ? "1" : "0", pt.skin ? "1" : "0", skin_side_name(pt.skin_side),
                   format_double(pt.max_abs_alpha), pt.flag});
    rows.push_back({{a1.name, v1}, {a2.name, v2}, {"phase", phase_name(pt.phase)},
                    {"topological", pt.topological}, {"skin", pt.skin},
                    {"skin_side", skin_side_name(pt.skin_side)},
                    {"max_abs_alpha", pt.max_abs_alpha}, {"flag", pt.flag}});
    if (!pt.flag.empty())
      env.diagnostics.push_back("(" + format_double(v1) + ", " + format_double(v2) + "): " + pt.flag);
    grid[i / a1.steps][i % a1.steps] = static_cast<double>(static_cast<int>(pt.phase));
  }
  env.payload = {{"rows", rows}};
  emit(c, "phase-diagram", env, table);
  if (c.svg)
    emit_svg(c, "phase-diagram",
             svg_heatmap(grid, "phase index over (" + a1.name + ", " + a2.name + ")"));
  return 0;
}

// ---- finite-size --------------------------------------------------------

int cmd_finite_size(const CommonOpts& c) {
  RunConfig cfg = load_config_file(c.config_path, {"sizes", "lo", "hi", "step", "gap_tol"});
  std::vector<int> sizes = {40, 400};
  if (cfg.options.contains("sizes")) sizes = cfg.options.at("sizes").get<std::vector<int>>();
  if (c.quick) {
    std::vector<int> kept;
    for (int n : sizes)
      if (n <= 100) kept.push_back(n);
    if (kept.empty()) kept.push_back(40);
    sizes = kept;
  }
  const double lo = opt_num(cfg.options, "lo", 0.0);
  const double hi = opt_num(cfg.options, "hi", 0.8);
  const double step = opt_num(cfg.options, "step", 0.005);
  const double gap_tol = opt_num(cfg.options, "gap_tol", 1e-2);

  const auto rows = finite_size_report(cfg.params, sizes, lo, hi, step, gap_tol);
  ResultEnvelope env = envelope(cfg, "finite-size");
  CsvTable table{{"N", "transition", "analytic", "drift"}, {}};
  json jr = json::array();
  for (const auto& r : rows) {
    table.add_row({std::to_string(r.N), r.transition ? format_double(*r.transition) : "",
                   format_double(r.analytic), r.transition ? format_double(r.drift) : ""});
    json row = {{"N", r.N}, {"analytic", r.analytic}};
    if (r.transition) {
      row["transition"] = *r.transition;
      row["drift"] = r.drift;
    } else {
      row["transition"] = nullptr;
      env.diagnostics.push_back("N=" + std::to_string(r.N) + ": no transition in the sweep window");
    }
    jr.push_back(row);
  }
  env.payload = {{"rows", jr}, {"gap_tol", gap_tol}};
  emit(c, "finite-size", env, table);
  return 0;
}

// ---- validate -----------------------------------------------------------

int cmd_validate(const CommonOpts& c) {
  unsigned seed = 12345;
  if (!c.config_path.empty()) {
    RunConfig cfg = load_config_file(c.config_path, {});
    seed = cfg.seed;
  }
  const auto results = run_acceptance(c.quick, seed);
  const std::string report = acceptance_report(results);
  std::cout << report;
  fs::create_directories(c.out_dir);
  write_text_file((fs::path(c.out_dir) / "validate.txt").string(), report);

  ResultEnvelope env;
  env.command = "validate";
  env.config = {{"seed", seed}, {"quick", c.quick}};
  json rows = json::array();
  for (const auto& r : results)
    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail},
                    {"seconds", r.seconds}});
  env.payload = {{"criteria", rows}, {"all_passed", all_passed(results)}};
  if (c.format == "json" || c.format == "both")
    write_text_file((fs::path(c.out_dir) / "validate.json").string(), env.serialize());
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nhchain: spectra, winding numbers, skin modes, surface Green's functions and "
               "phase diagrams of a non-reciprocal two-band chain"};
  app.require_subcommand(1);

  CommonOpts spectrum_o, winding_o, skin_o, greens_o, phase_o, finite_o, validate_o;
  add_common(app.add_subcommand("spectrum", "OBC eigenvalues and eigenstate magnitudes"), spectrum_o);
  add_common(app.add_subcommand("winding", "winding-number criterion along a parameter sweep"), winding_o);
  add_common(app.add_subcommand("skin", "alpha(theta) curve and boundary-quantized skin modes"), skin_o);
  add_common(app.add_subcommand("greens", "surface/bulk spectral functions along a t2 sweep"), greens_o);
  add_common(app.add_subcommand("phase-diagram", "two-axis phase classification grid"), phase_o);
  add_common(app.add_subcommand("finite-size", "zero-mode transition vs chain length"), finite_o);
  add_common(app.add_subcommand("validate", "run the full acceptance suite"), validate_o,
             /*config_required=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("spectrum")) return cmd_spectrum(spectrum_o);
    if (app.got_subcommand("winding")) return cmd_winding(winding_o);
    if (app.got_subcommand("skin")) return cmd_skin(skin_o);
    if (app.got_subcommand("greens")) return cmd_greens(greens_o);
    if (app.got_subcommand("phase-diagram")) return cmd_phase_diagram(phase_o);
    if (app.got_subcommand("finite-size")) return cmd_finite_size(finite_o);
    if (app.got_subcommand("validate")) return cmd_validate(validate_o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
