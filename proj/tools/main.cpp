#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mtdc/acceptance.hpp"
#include "mtdc/laplace.hpp"
#include "mtdc/network.hpp"
#include "mtdc/oracle.hpp"
#include "mtdc/relay.hpp"
#include "mtdc/scenario.hpp"
#include "mtdc/simulate.hpp"
#include "mtdc/sweep.hpp"
#include "mtdc/trace_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitAcceptance = 3;

mtdc::Scenario default_scenario() {
  mtdc::Scenario sc;
  sc.fault.kind = mtdc::FaultKind::InternalPTP;
  sc.fault.location_d = 0.5;
  sc.fault.r_f = 0.0;
  return sc;
}

mtdc::Scenario load_or_default(const std::string& path) {
  if (path.empty()) return default_scenario();
  return mtdc::load_scenario_file(path);
}

void apply_overrides(mtdc::Scenario& sc, double dt, std::uint64_t seed, bool seed_set) {
  if (dt > 0.0) sc.sim.dt = dt;
  if (seed_set) sc.seed = seed;
}

void print_warnings(const mtdc::Scenario& sc) {
  for (const std::string& w : sc.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_run(const std::string& scenario_path, const std::string& out_dir, double dt,
            std::uint64_t seed, bool seed_set) {
  mtdc::Scenario sc = load_or_default(scenario_path);
  apply_overrides(sc, dt, seed, seed_set);
  print_warnings(sc);

  const mtdc::Topology topo = mtdc::make_topology(sc.system);
  const mtdc::NetworkModel net = mtdc::build_network(topo, sc.fault, sc.sim);
  const mtdc::StateSpaceModel model = mtdc::build_state_space(net);
  const mtdc::MeasurementSet ms = mtdc::simulate(model, sc.fault, sc.sim);
  const mtdc::RelayInputs in =
      mtdc::condition_measurements(ms, sc.relay, sc.snr_db, sc.seed);
  const mtdc::RelayDecision decision = mtdc::classify(in, sc.relay);

  const std::string id =
      scenario_path.empty() ? "default" : std::filesystem::path(scenario_path).stem().string();
  std::cout << mtdc::decision_text(id, decision) << "\n";

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const auto path = [&](const char* name) {
      return (std::filesystem::path(out_dir) / name).string();
    };
    std::ofstream report(path("decision.csv"), std::ios::binary);
    report << mtdc::decision_csv_header() << "\n"
           << mtdc::decision_csv_row(id, decision) << "\n";
    const auto [v_zero, v_line] = mtdc::relay_tap(ms);
    mtdc::write_traces_csv(path("measurements.csv"),
                           {&ms.v_clr_p, &ms.v_clr_n, &ms.i_p, &ms.i_n});
    mtdc::write_traces_csv(path("mode_voltages.csv"), {&v_zero, &v_line});
    mtdc::write_traces_csv(path("relay_inputs.csv"),
                           {&in.v_clr_p, &in.v_clr_n, &in.i_p, &in.i_n});
    if (!ms.v_f_p.empty())
      mtdc::write_traces_csv(path("fault_point.csv"),
                             {&ms.v_f_p, &ms.v_f_n, &ms.i_f_p, &ms.i_f_n});
    std::cout << "artifacts written to " << out_dir << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const std::string& scenario_path, const std::string& out_dir, int workers,
              const std::string& mode, double dt, std::uint64_t seed, bool seed_set,
              double snr_db, int seed_count, const std::vector<std::string>& kind_names) {
  mtdc::SweepSpec spec;
  spec.base = scenario_path.empty() ? mtdc::Scenario{} : mtdc::load_scenario_file(scenario_path);
  apply_overrides(spec.base, dt, seed, seed_set);
  print_warnings(spec.base);

  if (mode == "simulate") spec.mode = mtdc::SweepMode::Simulate;
  else if (mode == "analytic") spec.mode = mtdc::SweepMode::Analytic;
  else if (mode == "both") spec.mode = mtdc::SweepMode::Both;
  else throw CLI::ValidationError("--mode", "must be simulate|analytic|both");

  if (kind_names.empty()) {
    spec.kinds = {mtdc::FaultKind::InternalPTP,        mtdc::FaultKind::InternalP_PTG,
                  mtdc::FaultKind::InternalN_PTG,      mtdc::FaultKind::ExternalForwardPTG,
                  mtdc::FaultKind::ExternalForwardPTP, mtdc::FaultKind::ExternalBackwardPTG,
                  mtdc::FaultKind::ExternalBackwardPTP};
  } else {
    for (const std::string& name : kind_names) {
      const auto k = mtdc::fault_kind_from_string(name);
      if (!k || *k == mtdc::FaultKind::None)
        throw CLI::ValidationError("--kind", "unknown fault kind: " + name);
      spec.kinds.push_back(*k);
    }
  }
  spec.workers = workers;
  if (std::isfinite(snr_db)) spec.snr_db = {snr_db};
  if (seed_count > 1) {
    spec.seeds.clear();
    for (int i = 1; i <= seed_count; ++i)
      spec.seeds.push_back(static_cast<std::uint64_t>(i));
  } else if (seed_set) {
    spec.seeds = {seed};
  }

  const mtdc::SweepReport report = mtdc::run_sweep(spec);
  std::size_t failed = 0;
  for (const auto& row : report.rows) failed += row.pass ? 0 : 1;
  std::cout << report.rows.size() << " grid points, " << failed << " failed\n";

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const auto path = [&](const char* name) {
      return (std::filesystem::path(out_dir) / name).string();
    };
    std::ofstream(path("sweep_report.csv"), std::ios::binary)
        << mtdc::report_csv(report);
    std::ofstream(path("sweep_pivot.csv"), std::ios::binary)
        << mtdc::pivot_csv(report);
    std::cout << "artifacts written to " << out_dir << "\n";
  } else {
    std::cout << mtdc::report_csv(report);
  }
  // A failed point is a data outcome, not a harness error.
  return kExitOk;
}

int cmd_oracle(const std::string& scenario_path, const std::string& out_dir, double dt,
               std::uint64_t seed, bool seed_set) {
  mtdc::Scenario sc = load_or_default(scenario_path);
  apply_overrides(sc, dt, seed, seed_set);
  print_warnings(sc);

  const mtdc::OracleComparison oc = mtdc::compare_oracle(sc);
  std::cout << mtdc::oracle_report(oc);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const auto p =
        (std::filesystem::path(out_dir) / "oracle_traces.csv").string();
    mtdc::write_traces_csv(p, {&oc.sim_line_mode, &oc.analytic_line_mode});
    std::cout << "artifacts written to " << out_dir << "\n";
  }
  return oc.pass ? kExitOk : kExitAcceptance;
}

int cmd_acceptance(const std::string& out_dir, int workers) {
  const mtdc::AcceptanceReport report = mtdc::run_acceptance(out_dir, workers);
  mtdc::print_report(report, std::cout);
  return mtdc::acceptance_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-terminal HVDC grid fault simulation and relay analysis"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir;
  int workers = 1;
  std::uint64_t seed = 1;
  bool seed_set = false;
  double dt = 0.0;
  std::string mode = "simulate";
  double snr_db = std::numeric_limits<double>::infinity();
  int seed_count = 0;
  std::vector<std::string> kind_names;

  const auto add_common = [&](CLI::App* cmd, bool with_scenario) {
    if (with_scenario)
      cmd->add_option("--scenario", scenario_path, "scenario file path");
    cmd->add_option("--out", out_dir, "artifact output directory");
    cmd->add_option("--seed", seed, "noise seed override")
        ->each([&](const std::string&) { seed_set = true; });
    cmd->add_option("--dt", dt, "solver time step override, seconds");
  };

  CLI::App* run = app.add_subcommand("run", "simulate one scenario and classify it");
  add_common(run, true);

  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter grid");
  add_common(sweep, true);
  sweep->add_option("--workers", workers, "concurrent grid workers");
  sweep->add_option("--mode", mode, "simulate|analytic|both");
  sweep->add_option("--snr", snr_db, "noise SNR in dB for every point");
  sweep->add_option("--seeds", seed_count, "run seeds 1..N per point");
  sweep->add_option("--kind", kind_names, "fault kinds (repeatable)");

  CLI::App* oracle =
      app.add_subcommand("oracle", "cross-validate the two solution engines");
  add_common(oracle, true);

  CLI::App* acceptance =
      app.add_subcommand("acceptance", "run the full acceptance suite");
  acceptance->add_option("--out", out_dir, "artifact output directory");
  acceptance->add_option("--workers", workers, "concurrent grid workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(scenario_path, out_dir, dt, seed, seed_set);
    if (sweep->parsed())
      return cmd_sweep(scenario_path, out_dir, workers, mode, dt, seed, seed_set,
                       snr_db, seed_count, kind_names);
    if (oracle->parsed()) return cmd_oracle(scenario_path, out_dir, dt, seed, seed_set);
    if (acceptance->parsed()) return cmd_acceptance(out_dir, workers);
  } catch (const mtdc::scenario_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mtdc::numerical_instability_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const mtdc::solver_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitUsage;
}
