#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <thread>

#include "acute/bounds.hpp"
#include "acute/constructions.hpp"
#include "acute/discrepancy.hpp"
#include "acute/energy.hpp"
#include "acute/expansions.hpp"
#include "acute/json_io.hpp"
#include "acute/optimize.hpp"
#include "acute/parallel.hpp"
#include "acute/version.hpp"

namespace acute::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Emitter {
  std::string subcommand;
  json parameters = json::object();
  Clock::time_point started = Clock::now();
  std::ostream* out_stream = nullptr;

  // Primary document goes to --out (with a sibling manifest listing file
  // digests) or to stdout when no path was given.
  void emit(const json& doc, const std::string& out_path,
            const std::vector<std::pair<std::string, std::string>>& extra_files = {}) {
    if (out_path.empty()) {
      *out_stream << dump_json(doc);
      return;
    }
    const std::string body = dump_json(doc);
    {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw Error(ErrorKind::Io, "cannot open for writing: " + out_path);
      f << body;
    }
    json outputs = json::array();
    outputs.push_back({{"path", out_path}, {"fnv1a64", fnv1a64_hex(body)}});
    for (const auto& [path, bytes] : extra_files)
      outputs.push_back({{"path", path}, {"fnv1a64", fnv1a64_hex(bytes)}});
    const double secs =
        std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - started).count();
    json manifest{{"tool_version", kVersion},
                  {"subcommand", subcommand},
                  {"parameters", parameters},
                  {"duration_seconds", secs},
                  {"outputs", outputs}};
    write_json_file(out_path + ".manifest.json", manifest);
  }
};

std::string write_text_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot open for writing: " + path);
  f << body;
  return body;
}

json rng_json(const RngSpec& rng) {
  return json{{"algorithm", RngSpec::algorithm()}, {"seed", rng.seed}, {"stream", rng.stream}};
}

json result_json(const OptimizationResult& result, const Potential& potential) {
  const auto& p = result.params;
  json per_restart = json::array();
  for (const auto& r : result.per_restart) {
    per_restart.push_back({{"energy", r.energy},
                           {"iterations", r.iterations},
                           {"converged", r.converged},
                           {"trace", r.trace}});
  }
  return json{{"dim", result.best_config.dim()},
              {"n", result.best_config.n()},
              {"potential", potential.name()},
              {"params",
               {{"max_iters", p.max_iters},
                {"initial_step", p.initial_step},
                {"backtracking_factor", p.backtracking_factor},
                {"max_backtracks", p.max_backtracks},
                {"rel_tol", p.rel_tol},
                {"smoothing_eps", p.smoothing_eps},
                {"restarts", p.restarts}}},
              {"rng", rng_json(p.rng)},
              {"best_energy", result.best_energy},
              {"best_restart", result.best_restart},
              {"per_restart", per_restart},
              {"best_config", configuration_to_json(result.best_config)}};
}

double stolarsky_residual(const PointConfiguration& config) {
  const double energy = discrete_energy(config, Potential::acute());
  return discrepancy_exact_sweep(config) + energy / std::numbers::pi - 0.25;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Error& e) {
    err << dump_json(json{{"error", e.kind_name()}, {"message", e.what()}});
    return e.kind() == ErrorKind::Usage ? 2 : 1;
  } catch (const std::exception& e) {
    err << dump_json(json{{"error", "internal"}, {"message", e.what()}});
    return 1;
  }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"acute-angle energies, bounds, and maximizer search on spheres"};
  app.require_subcommand(1);
  app.fallthrough(false);

  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  const auto add_threads = [&threads](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "worker cap (never changes results)")
        ->capture_default_str();
  };
  add_threads(&app);

  Emitter emitter;
  emitter.out_stream = &out;

  // ---- energy ----------------------------------------------------------
  auto* energy_cmd = app.add_subcommand("energy", "pair energy of a configuration or measure");
  std::string energy_input, energy_pot = "acute", energy_out;
  energy_cmd->add_option("--input", energy_input, "configuration/measure JSON")->required();
  energy_cmd->add_option("--potential", energy_pot, "acute|frame|pframe:p|geodesic|quadmaj:b");
  energy_cmd->add_option("--out", energy_out, "output JSON path (default stdout)");

  // ---- construct -------------------------------------------------------
  auto* construct_cmd = app.add_subcommand("construct", "builders for the named configurations");
  construct_cmd->require_subcommand(1);
  auto* onb_cmd = construct_cmd->add_subcommand("onb", "cycled orthonormal-basis configuration");
  int onb_dim = 0;
  std::size_t onb_n = 0;
  std::string onb_out;
  onb_cmd->add_option("--dim", onb_dim)->required();
  onb_cmd->add_option("--n", onb_n)->required();
  onb_cmd->add_option("--out", onb_out);
  auto* eq_cmd = construct_cmd->add_subcommand("equispaced", "equal masses at N circle angles");
  std::size_t eq_n = 0;
  std::string eq_out;
  eq_cmd->add_option("--n", eq_n)->required();
  eq_cmd->add_option("--out", eq_out);
  auto* comp_cmd =
      construct_cmd->add_subcommand("compose", "orthogonal-subsphere composition of two measures");
  double comp_alpha = 0.5;
  std::vector<std::string> comp_files;
  std::string comp_out;
  comp_cmd->add_option("--alpha", comp_alpha, "mass of the first measure")->required();
  comp_cmd->add_option("files", comp_files, "two measure JSON files")->expected(2);
  comp_cmd->add_option("--out", comp_out);

  // ---- optimize --------------------------------------------------------
  auto* opt_cmd = app.add_subcommand("optimize", "multi-restart projected ascent");
  int opt_dim = 2;
  std::size_t opt_n = 3;
  std::string opt_pot = "acute", opt_out;
  AscentParams opt_params;
  opt_cmd->add_option("--dim", opt_dim)->required();
  opt_cmd->add_option("--n", opt_n)->required();
  opt_cmd->add_option("--potential", opt_pot);
  opt_cmd->add_option("--restarts", opt_params.restarts)->capture_default_str();
  opt_cmd->add_option("--seed", opt_params.rng.seed)->capture_default_str();
  opt_cmd->add_option("--eps", opt_params.smoothing_eps, "smoothing eps (0 = subgradient)")
      ->capture_default_str();
  opt_cmd->add_option("--max-iters", opt_params.max_iters)->capture_default_str();
  opt_cmd->add_option("--out", opt_out);

  // ---- expand ----------------------------------------------------------
  auto* expand_cmd = app.add_subcommand("expand", "orthogonal expansion coefficients");
  std::string expand_basis = "chebyshev", expand_pot = "acute", expand_csv, expand_out;
  int expand_nmax = 64, expand_nodes = 4096;
  expand_cmd->add_option("--basis", expand_basis, "chebyshev|fourier|gegenbauer:d");
  expand_cmd->add_option("--potential", expand_pot);
  expand_cmd->add_option("--nmax", expand_nmax)->capture_default_str();
  expand_cmd->add_option("--nodes", expand_nodes)->capture_default_str();
  expand_cmd->add_option("--emit-csv", expand_csv, "write n,coefficient rows here");
  expand_cmd->add_option("--out", expand_out);

  // ---- discrepancy -----------------------------------------------------
  auto* disc_cmd = app.add_subcommand("discrepancy", "L2 quadrant discrepancy on the circle");
  std::string disc_input, disc_method = "exact", disc_out;
  std::size_t disc_samples = 100000;
  std::uint64_t disc_seed = 0;
  disc_cmd->add_option("--input", disc_input)->required();
  disc_cmd->add_option("--method", disc_method, "exact|closed|mc");
  disc_cmd->add_option("--samples", disc_samples)->capture_default_str();
  disc_cmd->add_option("--seed", disc_seed)->capture_default_str();
  disc_cmd->add_option("--out", disc_out);

  // ---- bounds ----------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "majorant and theorem bounds");
  int bounds_dim = 0;
  double bounds_b = 69.0 / 50.0;
  std::string bounds_out;
  auto* bounds_dim_opt = bounds_cmd->add_option("--dim", bounds_dim);
  bounds_cmd->add_option("--b", bounds_b)->capture_default_str();
  bounds_cmd->add_option("--out", bounds_out);
  auto* critb_cmd = bounds_cmd->add_subcommand("critical-b", "bisection root of the margin condition");
  std::string critb_out;
  critb_cmd->add_option("--out", critb_out);
  auto* margin_cmd = bounds_cmd->add_subcommand("margin", "majorant margin survey");
  double margin_b = 69.0 / 50.0;
  long margin_grid = 1000000;
  std::string margin_csv, margin_out;
  margin_cmd->add_option("--b", margin_b)->capture_default_str();
  margin_cmd->add_option("--grid", margin_grid)->capture_default_str();
  margin_cmd->add_option("--emit-csv", margin_csv, "t,margin curve samples");
  margin_cmd->add_option("--out", margin_out);

  // ---- report ----------------------------------------------------------
  auto* report_cmd = app.add_subcommand("report", "conjecture status: optimizer vs bounds");
  int rep_dim = 2;
  std::size_t rep_n = 3;
  std::string rep_out;
  AscentParams rep_params;
  rep_params.restarts = 16;
  report_cmd->add_option("--dim", rep_dim)->required();
  report_cmd->add_option("--n", rep_n)->required();
  report_cmd->add_option("--restarts", rep_params.restarts)->capture_default_str();
  report_cmd->add_option("--seed", rep_params.rng.seed)->capture_default_str();
  report_cmd->add_option("--eps", rep_params.smoothing_eps)->capture_default_str();
  report_cmd->add_option("--out", rep_out);

  for (CLI::App* cmd : {energy_cmd, onb_cmd, eq_cmd, comp_cmd, opt_cmd, expand_cmd, disc_cmd,
                        bounds_cmd, critb_cmd, margin_cmd, report_cmd})
    add_threads(cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << dump_json(json{{"error", "usage"}, {"message", e.what()}});
    return 2;
  }

  set_max_threads(static_cast<int>(threads));

  if (energy_cmd->parsed()) {
    emitter.subcommand = "energy";
    const Potential pot = Potential::parse(energy_pot);
    const DiscreteMeasure mu = measure_from_json(load_json_file(energy_input));
    emitter.parameters = {{"input", energy_input}, {"potential", pot.name()}};
    emitter.emit(json{{"energy", measure_energy(mu, pot)}, {"n", mu.n()}, {"dim", mu.dim()}},
                 energy_out);
    return 0;
  }

  if (construct_cmd->parsed()) {
    if (onb_cmd->parsed()) {
      emitter.subcommand = "construct onb";
      emitter.parameters = {{"dim", onb_dim}, {"n", onb_n}};
      emitter.emit(configuration_to_json(onb_configuration(onb_dim, onb_n)), onb_out);
    } else if (eq_cmd->parsed()) {
      emitter.subcommand = "construct equispaced";
      emitter.parameters = {{"n", eq_n}};
      emitter.emit(measure_to_json(equispaced_measure(eq_n)), eq_out);
    } else {
      emitter.subcommand = "construct compose";
      emitter.parameters = {{"alpha", comp_alpha}, {"files", comp_files}};
      const DiscreteMeasure a = measure_from_json(load_json_file(comp_files[0]));
      const DiscreteMeasure b = measure_from_json(load_json_file(comp_files[1]));
      emitter.emit(measure_to_json(compose_measures(a, b, comp_alpha)), comp_out);
    }
    return 0;
  }

  if (opt_cmd->parsed()) {
    emitter.subcommand = "optimize";
    const Potential pot = Potential::parse(opt_pot);
    emitter.parameters = {{"dim", opt_dim},
                          {"n", opt_n},
                          {"potential", pot.name()},
                          {"restarts", opt_params.restarts},
                          {"eps", opt_params.smoothing_eps},
                          {"rng", rng_json(opt_params.rng)}};
    const OptimizationResult result = ascend(opt_dim, opt_n, pot, opt_params);
    json doc = result_json(result, pot);
    if (pot.kind == Potential::Kind::AcuteAngle) {
      const double conj = conjectured_value(opt_dim, opt_n);
      doc["conjectured_value"] = conj;
      doc["gap"] = conj - result.best_energy;
    } else {
      doc["conjectured_value"] = nullptr;
      doc["gap"] = nullptr;
    }
    emitter.emit(doc, opt_out);
    return 0;
  }

  if (expand_cmd->parsed()) {
    emitter.subcommand = "expand";
    const Potential pot = Potential::parse(expand_pot);
    ExpansionCoefficients coeffs;
    if (expand_basis == "chebyshev") {
      coeffs = chebyshev_coefficients(pot, expand_nmax, expand_nodes);
    } else if (expand_basis == "fourier") {
      coeffs = fourier_cosine_coefficients(pot, expand_nmax, expand_nodes);
    } else if (expand_basis.rfind("gegenbauer:", 0) == 0) {
      int d = 0;
      try {
        d = std::stoi(expand_basis.substr(11));
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::Usage, "bad basis: " + expand_basis);
      }
      coeffs = gegenbauer_coefficients(pot, d, expand_nmax, expand_nodes);
    } else {
      throw Error(ErrorKind::Usage,
                  "unknown basis '" + expand_basis + "' (chebyshev|fourier|gegenbauer:d)");
    }
    emitter.parameters = {{"basis", expand_basis},
                          {"potential", pot.name()},
                          {"nmax", expand_nmax},
                          {"nodes", expand_nodes}};
    json doc{{"basis", to_string(coeffs.basis)},
             {"potential", pot.name()},
             {"nmax", coeffs.nmax()},
             {"nodes", coeffs.nodes},
             {"coefficients", coeffs.values}};
    if (coeffs.basis == Basis::Gegenbauer) {
      doc["gegenbauer_dim"] = coeffs.gegenbauer_dim;
      doc["negative_definite_s1"] = nullptr;
      doc["equispaced_maximizer"] = nullptr;
    } else {
      doc["negative_definite_s1"] = is_negative_definite_s1(coeffs);
      if (coeffs.basis == Basis::FourierCosine) {
        json verdicts = json::object();
        for (int npts = 1; npts <= 8; ++npts)
          verdicts[std::to_string(npts)] = check_equispaced_maximizer(coeffs, npts);
        doc["equispaced_maximizer"] = verdicts;
      } else {
        doc["equispaced_maximizer"] = nullptr;
      }
    }
    std::vector<std::pair<std::string, std::string>> extra;
    if (!expand_csv.empty()) {
      std::string csv = "n,coefficient\n";
      for (int n = 0; n <= coeffs.nmax(); ++n)
        csv += std::to_string(n) + "," + format_double(coeffs.values[n]) + "\n";
      extra.emplace_back(expand_csv, write_text_file(expand_csv, csv));
    }
    emitter.emit(doc, expand_out, extra);
    return 0;
  }

  if (disc_cmd->parsed()) {
    emitter.subcommand = "discrepancy";
    const PointConfiguration config = configuration_from_json(load_json_file(disc_input));
    const double energy = discrete_energy(config, Potential::acute());
    emitter.parameters = {{"input", disc_input}, {"method", disc_method}};
    json doc;
    if (disc_method == "exact") {
      const double d2 = discrepancy_exact_sweep(config);
      doc = {{"discrepancy", d2},
             {"energy", energy},
             {"stolarsky_residual", d2 + energy / std::numbers::pi - 0.25}};
    } else if (disc_method == "closed") {
      const double d2 = discrepancy_closed_form(uniform_measure(config));
      doc = {{"discrepancy", d2},
             {"energy", energy},
             {"stolarsky_residual", d2 + energy / std::numbers::pi - 0.25}};
    } else if (disc_method == "mc") {
      const RngSpec rng{disc_seed, 0};
      emitter.parameters["samples"] = disc_samples;
      emitter.parameters["rng"] = rng_json(rng);
      const MonteCarloEstimate est = discrepancy_monte_carlo(config, disc_samples, rng);
      doc = {{"discrepancy", est.estimate},
             {"energy", energy},
             {"stolarsky_residual", est.estimate + energy / std::numbers::pi - 0.25},
             {"standard_error", est.standard_error},
             {"samples", est.samples}};
    } else {
      throw Error(ErrorKind::Usage, "unknown method '" + disc_method + "' (exact|closed|mc)");
    }
    emitter.emit(doc, disc_out);
    return 0;
  }

  if (bounds_cmd->parsed()) {
    if (critb_cmd->parsed()) {
      emitter.subcommand = "bounds critical-b";
      const double tol = 1e-10;
      const double bstar = critical_b(tol);
      emitter.parameters = {{"tolerance", tol}};
      emitter.emit(json{{"critical_b", bstar},
                        {"tolerance", tol},
                        {"bracket", {69.0 / 50.0, 1.40}},
                        {"condition_at_69_50", majorant_condition(69.0 / 50.0)}},
                   critb_out);
    } else if (margin_cmd->parsed()) {
      emitter.subcommand = "bounds margin";
      const MajorantReport report = majorant_margin(margin_b, margin_grid);
      emitter.parameters = {{"b", margin_b}, {"grid", margin_grid}};
      std::vector<std::pair<std::string, std::string>> extra;
      if (!margin_csv.empty()) {
        // Figure-style curve t -> pi/2 - b t^2 - arccos|t| on [0,1]
        std::string csv = "t,margin\n";
        const int rows = 1000;
        for (int i = 0; i <= rows; ++i) {
          const double t = static_cast<double>(i) / rows;
          const double m = std::numbers::pi / 2.0 - margin_b * t * t - std::acos(t);
          csv += format_double(t) + "," + format_double(m) + "\n";
        }
        extra.emplace_back(margin_csv, write_text_file(margin_csv, csv));
      }
      emitter.emit(json{{"b", report.b},
                        {"grid", report.grid_size},
                        {"min_margin", report.min_margin},
                        {"argmin_t", report.argmin_t},
                        {"condition_value", report.condition_value},
                        {"condition_applicable", report.condition_applicable}},
                   margin_out, extra);
    } else {
      emitter.subcommand = "bounds";
      if (!*bounds_dim_opt)
        throw Error(ErrorKind::Usage, "bounds: --dim is required (or use critical-b / margin)");
      const TheoremBound bound = theorem_bound(bounds_dim, bounds_b);
      emitter.parameters = {{"dim", bounds_dim}, {"b", bounds_b}};
      emitter.emit(json{{"dim", bound.dim},
                        {"b", bound.b},
                        {"bound", bound.value},
                        {"d1_caveat", bound.d1_caveat}},
                   bounds_out);
    }
    return 0;
  }

  if (report_cmd->parsed()) {
    emitter.subcommand = "report";
    emitter.parameters = {{"dim", rep_dim},
                          {"n", rep_n},
                          {"restarts", rep_params.restarts},
                          {"eps", rep_params.smoothing_eps},
                          {"rng", rng_json(rep_params.rng)}};
    const OptimizationResult result = ascend(rep_dim, rep_n, Potential::acute(), rep_params);
    const GapReport gap = gap_report(rep_dim, rep_n, result.best_energy);
    json doc{{"dim", gap.dim},
             {"n", gap.n},
             {"conjectured", gap.conjectured},
             {"best_found", gap.best_found},
             {"upper_bound", gap.upper_bound},
             {"bound_kind", gap.bound_kind},
             {"gap", gap.gap},
             {"sandwich_ok", gap.sandwich_ok},
             {"best_restart", result.best_restart},
             {"rng", rng_json(rep_params.rng)}};
    if (rep_dim == 1) {
      const double residual = stolarsky_residual(result.best_config);
      doc["stolarsky_residual"] = residual;
      doc["stolarsky_ok"] = std::abs(residual) < 1e-9;
    } else {
      doc["stolarsky_residual"] = nullptr;
      doc["stolarsky_ok"] = nullptr;
    }
    emitter.emit(doc, rep_out);
    return 0;
  }

  err << dump_json(json{{"error", "usage"}, {"message", "no subcommand given"}});
  return 2;
}

}  // namespace

}  // namespace acute::cli
