// Command-line front end: simulate | validate | compare over JSON run configs.

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "dgnet/dgnet.hpp"

namespace {

struct Args {
  std::string config;
  std::string out;
  std::string flux;
  double dt = 0.0;
  double t_end = -1.0;
  bool emit_traces = false;
};

dgnet::ParsedConfig load_config(const Args& args) {
  dgnet::ParsedConfig cfg = dgnet::parse_config(args.config);
  if (!args.flux.empty()) cfg.flux_kind = dgnet::parse_flux_kind(args.flux);
  if (args.dt > 0.0) cfg.solver.dt = args.dt;
  if (args.t_end >= 0.0) cfg.solver.t_end = args.t_end;
  return cfg;
}

// The max-possible rule only covers 1-in/2-out junctions with a split strictly
// inside (0, 1); reject other networks before spending time on projection.
void check_flux_applicability(const dgnet::ValidatedNetwork& net,
                              dgnet::JunctionFluxKind kind) {
  if (kind != dgnet::JunctionFluxKind::MaxPossible1x2) return;
  for (const dgnet::Junction& junction : net.junctions()) {
    if (junction.incoming.size() != 1 || junction.outgoing.size() != 2) {
      throw dgnet::UnsupportedJunctionError(
          "max-possible coupling is implemented for 1-in/2-out junctions only, got " +
          std::to_string(junction.incoming.size()) + "-in/" +
          std::to_string(junction.outgoing.size()) + "-out");
    }
    const double alpha = junction.distribution(0, 0);
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw dgnet::DegenerateAlphaError(
          "max-possible coupling needs a split strictly inside (0, 1), got " +
          dgnet::format_double(alpha));
    }
  }
}

bool max_possible_applicable(const dgnet::ValidatedNetwork& net) {
  for (const dgnet::Junction& junction : net.junctions()) {
    if (junction.incoming.size() != 1 || junction.outgoing.size() != 2) return false;
    const double alpha = junction.distribution(0, 0);
    if (!(alpha > 0.0 && alpha < 1.0)) return false;
  }
  return true;
}

void print_run_summary(const dgnet::ParsedConfig& cfg, const dgnet::RunResult& result,
                       const std::vector<dgnet::Mesh>& meshes) {
  const auto& final_snap = result.trajectory.final_snapshot();
  double total = 0.0;
  for (std::size_t r = 0; r < final_snap.states.size(); ++r) {
    const double mass = dgnet::total_mass(final_snap.states[r], meshes[r]);
    total += mass;
    std::cout << "road " << cfg.network.roads[r].id << ": final mass "
              << dgnet::format_double(mass) << '\n';
  }
  const auto& first = result.diagnostics.front();
  double mass0 = 0.0;
  for (double m : first.road_mass) mass0 += m;
  std::cout << "total mass " << dgnet::format_double(total) << " (drift "
            << dgnet::format_double(total - mass0 - result.bounds.mass_correction)
            << " after corrections, violations " << result.bounds.violations << ")\n";
}

void warn_cfl(const dgnet::RunResult& result, int degree) {
  if (result.cfl_warnings > 0) {
    std::cerr << "warning: CFL number " << dgnet::format_double(result.cfl_number)
              << " exceeds the advisory limit for degree " << degree << '\n';
  }
}

int run_simulate(const Args& args) {
  dgnet::ParsedConfig cfg = load_config(args);
  dgnet::ValidatedNetwork net =
      dgnet::validate_network(cfg.network, cfg.diagram.u_max);
  check_flux_applicability(net, cfg.flux_kind);
  auto sys = dgnet::make_system(std::move(net), cfg.diagram, cfg.flux_kind);

  const auto start = std::chrono::steady_clock::now();
  dgnet::RunResult result = dgnet::run_simulation(sys, cfg.solver);
  const double runtime =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  warn_cfl(result, sys.degree);
  dgnet::WriteOptions options;
  options.emit_traces = args.emit_traces;
  options.command = "simulate";
  options.runtime_seconds = runtime;
  dgnet::write_outputs(sys, result, cfg, args.out, options);

  std::cout << "simulated " << args.config << " with " << to_string(cfg.flux_kind)
            << " to t=" << dgnet::format_double(cfg.solver.t_end) << " in "
            << dgnet::format_double(runtime) << " s\n";
  print_run_summary(cfg, result, sys.meshes);
  std::cout << "outputs written to " << args.out << '\n';
  return 0;
}

int run_validate(const Args& args) {
  dgnet::ParsedConfig cfg = dgnet::parse_config(args.config);
  dgnet::ValidatedNetwork net =
      dgnet::validate_network(cfg.network, cfg.diagram.u_max);
  std::cout << "configuration OK: " << net.roads().size() << " roads, "
            << net.junctions().size() << " junctions, flux kind "
            << to_string(cfg.flux_kind) << '\n';
  return 0;
}

int run_compare(const Args& args) {
  dgnet::ParsedConfig cfg = load_config(args);
  dgnet::ValidatedNetwork net =
      dgnet::validate_network(cfg.network, cfg.diagram.u_max);

  std::vector<dgnet::JunctionFluxKind> kinds = {dgnet::JunctionFluxKind::AlphaOutside,
                                                dgnet::JunctionFluxKind::AlphaInside};
  if (max_possible_applicable(net)) {
    kinds.push_back(dgnet::JunctionFluxKind::MaxPossible1x2);
  } else {
    std::cout << "note: max-possible skipped (network is not 1-in/2-out everywhere)\n";
  }

  // kind -> per-snapshot road masses, all runs sharing one time grid
  std::vector<std::vector<dgnet::DiagnosticsRecord>> records;
  for (dgnet::JunctionFluxKind kind : kinds) {
    dgnet::ParsedConfig run_cfg = cfg;
    run_cfg.flux_kind = kind;
    auto sys = dgnet::make_system(
        dgnet::validate_network(run_cfg.network, run_cfg.diagram.u_max),
        run_cfg.diagram, kind);
    const auto start = std::chrono::steady_clock::now();
    dgnet::RunResult result = dgnet::run_simulation(sys, run_cfg.solver);
    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    warn_cfl(result, sys.degree);

    dgnet::WriteOptions options;
    options.emit_traces = args.emit_traces;
    options.command = "compare";
    options.runtime_seconds = runtime;
    dgnet::write_outputs(sys, result, run_cfg,
                         std::filesystem::path(args.out) / to_string(kind), options);

    std::cout << "== " << to_string(kind) << " ==\n";
    print_run_summary(run_cfg, result, sys.meshes);
    records.push_back(std::move(result.diagnostics));
  }

  std::string csv = "t,road_id";
  for (dgnet::JunctionFluxKind kind : kinds) {
    csv += ",mass_";
    csv += to_string(kind);
  }
  csv += '\n';
  for (std::size_t s = 0; s < records.front().size(); ++s) {
    for (std::size_t r = 0; r < cfg.network.roads.size(); ++r) {
      csv += dgnet::format_double(records.front()[s].t);
      csv += ',';
      csv += std::to_string(cfg.network.roads[r].id);
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        csv += ',';
        csv += dgnet::format_double(records[k][s].road_mass[r]);
      }
      csv += '\n';
    }
  }
  std::filesystem::create_directories(args.out);
  std::ofstream out(std::filesystem::path(args.out) / "comparison.csv",
                    std::ios::binary);
  if (!out) throw dgnet::IoError("cannot write comparison.csv");
  out << csv;
  std::cout << "comparison written to " << args.out << "/comparison.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discontinuous Galerkin solver for traffic flow on road networks"};
  app.set_version_flag("--version", dgnet::version);
  app.require_subcommand(1);

  Args args;
  CLI::App* simulate = app.add_subcommand("simulate", "run one simulation");
  simulate->add_option("--config", args.config, "run configuration (JSON)")->required();
  simulate->add_option("--out", args.out, "output directory")->required();
  simulate->add_option("--flux", args.flux,
                       "override flux kind: alpha-outside | alpha-inside | max-possible");
  simulate->add_option("--dt", args.dt, "override time step");
  simulate->add_option("--t-end", args.t_end, "override final time");
  simulate->add_flag("--emit-traces", args.emit_traces,
                     "also write per-element endpoint traces");

  CLI::App* validate = app.add_subcommand("validate", "check a configuration");
  validate->add_option("--config", args.config, "run configuration (JSON)")->required();

  CLI::App* compare =
      app.add_subcommand("compare", "run every applicable flux kind side by side");
  compare->add_option("--config", args.config, "run configuration (JSON)")->required();
  compare->add_option("--out", args.out, "output directory")->required();
  compare->add_flag("--emit-traces", args.emit_traces,
                    "also write per-element endpoint traces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 64;
  }

  try {
    if (simulate->parsed()) return run_simulate(args);
    if (validate->parsed()) return run_validate(args);
    if (compare->parsed()) return run_compare(args);
    std::cerr << app.help();
    return 64;
  } catch (const dgnet::MassViolationError& e) {
    std::cerr << "aborted: " << e.what() << '\n';
    return 2;
  } catch (const dgnet::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
