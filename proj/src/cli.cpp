#include "infolab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "infolab/errors.hpp"
#include "infolab/montecarlo.hpp"
#include "infolab/report.hpp"
#include "infolab/scenario.hpp"
#include "infolab/solver.hpp"
#include "infolab/statics.hpp"

namespace infolab {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string scenario_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n_samples;
  std::optional<double> tol;
  std::vector<std::string> checks;
};

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

Scenario load(const Options& o) {
  Scenario sc = load_scenario(o.scenario_path);
  if (o.tol) {
    if (!(*o.tol > 0.0 && *o.tol <= 1e-3)) throw ScenarioError("--tol must lie in (0, 1e-3]");
    sc.tol = *o.tol;
  }
  return sc;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Scenario sc = load(o);
  std::vector<SolveResult> rows;
  std::vector<Regime> regimes;
  const double t = sc.params.prior_precision;
  const double h = sc.params.pm_precision;
  for (Setting s : sc.settings) {
    rows.push_back(solve(s, sc.mu(), sc.params, sc.cost, sc.tol));
    regimes.push_back(classify_regime(sc.mu(), t, h));
    out << to_string(s) << ": k*=" << format_real(rows.back().k_star) << " ("
        << to_string(rows.back().solution_kind) << ")\n";
  }
  const fs::path path = fs::path(o.out_dir) / "solve.csv";
  write_file(path, solve_csv(rows, regimes, o.seed.value_or(0), sc.name));
  out << "wrote " << path.string() << "\n";
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const Scenario sc = load(o);
  if (!sc.sweep) throw ScenarioError("scenario has no 'sweep' block");
  SweepSpec spec;
  spec.parameter = sc.sweep->parameter;
  spec.grid = sc.sweep->grid;
  spec.params = sc.params;
  spec.cost = sc.cost;
  spec.mu = sc.mu();
  spec.sigma2 = sc.sigma2();
  spec.settings = sc.settings;
  spec.tol = sc.tol;
  const SweepTable table = sweep(spec);
  for (const SweepSeries& s : table.series) {
    out << to_string(s.setting) << ": " << s.rows.size() << " rows over "
        << to_string(table.parameter) << "\n";
  }
  const fs::path path = fs::path(o.out_dir) / "sweep.csv";
  write_file(path, sweep_csv(table, o.seed.value_or(0), sc.name));
  out << "wrote " << path.string() << "\n";
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Scenario sc = load(o);
  if (!sc.simulate) throw ScenarioError("scenario has no 'simulate' block");
  SimConfig cfg;
  cfg.params = sc.params;
  cfg.k = sc.simulate->k;
  cfg.seed = o.seed.value_or(sc.simulate->seed);
  cfg.n_samples = o.n_samples.value_or(sc.simulate->n_samples);
  cfg.threads = sc.simulate->threads;

  std::vector<SimulationRow> rows;
  for (Setting s : sc.settings) {
    cfg.setting = s;
    SimulationRow row{s, cfg.k, simulate_mse(cfg),
                      expected_mse(s, cfg.k, sc.mu(), sc.sigma2(), sc.params)};
    out << to_string(s) << ": mse=" << format_real(row.estimate.mean)
        << " se=" << format_real(row.estimate.std_error)
        << " closed_form=" << format_real(row.closed_form)
        << " z=" << format_real(row.estimate.z_score(row.closed_form)) << "\n";
    rows.push_back(row);
  }
  const fs::path path = fs::path(o.out_dir) / "simulate.csv";
  write_file(path, simulate_csv(rows, cfg.seed, sc.name));
  out << "wrote " << path.string() << "\n";
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const Scenario sc = load(o);
  CertifyBlock block = sc.certify.value_or(CertifyBlock{});
  if (!o.checks.empty()) block.checks = o.checks;
  if (o.seed) block.seed = *o.seed;
  if (o.n_samples) block.n_points = *o.n_samples;

  std::vector<CertificationReport> reports;
  for (const std::string& check : block.checks) {
    if (check == "corollary1") {
      reports.push_back(
          certify_corollary1(block.box, sc.cost, block.n_points, block.seed, sc.tol));
    } else if (check == "proposition1") {
      const auto pts = proposition1_points(block.box, block.n_points, block.seed);
      reports.push_back(certify_proposition1(pts, sc.cost, sc.tol));
      reports.back().seed = block.seed;
    } else if (check == "proposition3") {
      const auto pts = proposition3_points(block.box, block.n_points, block.seed);
      reports.push_back(certify_proposition3(pts, sc.cost, block.box, block.seed,
                                             block.search_tries, sc.tol));
    } else {
      throw ScenarioError("unknown check '" + check +
                          "' (expected corollary1, proposition1 or proposition3)");
    }
    const auto& r = reports.back();
    out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.points_checked
        << " points, " << r.comparisons << " comparisons, " << r.counterexamples.size()
        << " counterexamples)\n";
  }
  const fs::path path = fs::path(o.out_dir) / "certify.json";
  write_file(path, reports_to_json(reports));
  out << "wrote " << path.string() << "\n";
  for (const auto& r : reports) {
    if (!r.passed()) return kExitCertification;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal forecaster precision under policy intervention", "lab"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("scenario", o.scenario_path, "Scenario JSON file")->required();
    sub->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--seed", o.seed, "Override the seed");
    sub->add_option("--n-samples", o.n_samples,
                    "Monte-Carlo sample count (simulate) or point count (certify)");
    sub->add_option("--tol", o.tol, "Solver tolerance on the first-order residual");
  };
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve for the optimal precision k*");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep k* over a parameter grid");
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo MSE vs closed form");
  CLI::App* cert_cmd = app.add_subcommand("certify", "Certify comparative-statics signs");
  for (auto* sub : {solve_cmd, sweep_cmd, sim_cmd, cert_cmd}) add_common(sub);
  cert_cmd->add_option("checks", o.checks, "corollary1, proposition1, proposition3");

  std::vector<const char*> argv{"lab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out);
    if (*sweep_cmd) return cmd_sweep(o, out);
    if (*sim_cmd) return cmd_simulate(o, out);
    return cmd_certify(o, out);
  } catch (const ScenarioError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace infolab
