#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "dgnet/limiter.hpp"
#include "dgnet/spatial_operator.hpp"
#include "dgnet/system.hpp"
#include "dgnet/trajectory.hpp"

namespace dgnet {

/// Total vehicle mass on one road. Legendre modes above 0 integrate to zero
/// over an element, so the mass is the h-weighted sum of cell averages.
inline double total_mass(const DGState& state, const Mesh& mesh) {
  double mass = 0.0;
  for (int k = 0; k < state.num_elements(); ++k) {
    mass += mesh.element_size(k) * state.coeffs(k, 0);
  }
  return mass;
}

/// One junction's flux bookkeeping at a time level: the realized fluxes, the
/// conservation residual sum(H_in) - sum(H_out), and the per-outgoing-road
/// distribution errors.
struct JunctionAudit {
  Eigen::VectorXd inflow;
  Eigen::VectorXd outflow;
  Eigen::VectorXd distribution_errors;
  double residual = 0.0;
};

template <FundamentalDiagram D>
std::vector<JunctionAudit> junction_audit(const NetworkSystem<D>& sys,
                                          const NetworkState& states,
                                          [[maybe_unused]] double t) {
  const std::vector<RoadTraces> tr = traces(states);
  const std::vector<JunctionFluxResult> fluxes = junction_fluxes(sys, tr);
  std::vector<JunctionAudit> audits;
  audits.reserve(fluxes.size());
  const auto junctions = sys.network.junctions();
  for (std::size_t j = 0; j < fluxes.size(); ++j) {
    JunctionAudit a;
    a.inflow = fluxes[j].inflow;
    a.outflow = fluxes[j].outflow;
    a.distribution_errors = distribution_error(fluxes[j], junctions[j].distribution);
    a.residual = a.inflow.sum() - a.outflow.sum();
    audits.push_back(std::move(a));
  }
  return audits;
}

/// Diagnostics recorded alongside each trajectory snapshot.
struct DiagnosticsRecord {
  double t = 0.0;
  std::vector<double> road_mass;
  std::vector<JunctionAudit> junctions;
  long bounds_violations = 0;
  double bounds_mass_correction = 0.0;
};

template <FundamentalDiagram D>
DiagnosticsRecord collect_record(const NetworkSystem<D>& sys,
                                 const NetworkState& states, double t,
                                 const BoundsLedger& ledger) {
  DiagnosticsRecord rec;
  rec.t = t;
  rec.road_mass.reserve(states.size());
  for (std::size_t r = 0; r < states.size(); ++r) {
    rec.road_mass.push_back(total_mass(states[r], sys.meshes[r]));
  }
  rec.junctions = junction_audit(sys, states, t);
  rec.bounds_violations = ledger.violations;
  rec.bounds_mass_correction = ledger.mass_correction;
  return rec;
}

/// Network-mass drift over a trajectory, relative to the initial snapshot.
/// max_unaccounted_drift subtracts the clamping corrections logged in the
/// diagnostics records; without records it equals max_abs_drift.
struct MassBalanceReport {
  double initial_mass = 0.0;
  double max_abs_drift = 0.0;
  double max_rel_drift = 0.0;
  double max_unaccounted_drift = 0.0;
};

template <FundamentalDiagram D>
MassBalanceReport mass_balance(const NetworkSystem<D>& sys, const Trajectory& traj,
                               std::span<const DiagnosticsRecord> records = {}) {
  if (traj.snapshots.empty()) throw DimensionError("trajectory has no snapshots");
  if (!records.empty() && records.size() != traj.snapshots.size()) {
    throw DimensionError("diagnostics records do not align with the trajectory");
  }
  MassBalanceReport report;
  double mass0 = 0.0;
  for (std::size_t r = 0; r < traj.snapshots.front().states.size(); ++r) {
    mass0 += total_mass(traj.snapshots.front().states[r], sys.meshes[r]);
  }
  report.initial_mass = mass0;
  const double correction0 = records.empty() ? 0.0 : records.front().bounds_mass_correction;
  for (std::size_t s = 0; s < traj.snapshots.size(); ++s) {
    double mass = 0.0;
    for (std::size_t r = 0; r < traj.snapshots[s].states.size(); ++r) {
      mass += total_mass(traj.snapshots[s].states[r], sys.meshes[r]);
    }
    const double drift = mass - mass0;
    report.max_abs_drift = std::max(report.max_abs_drift, std::abs(drift));
    if (mass0 != 0.0) {
      report.max_rel_drift = std::max(report.max_rel_drift, std::abs(drift / mass0));
    }
    const double correction =
        records.empty() ? 0.0 : records[s].bounds_mass_correction - correction0;
    report.max_unaccounted_drift =
        std::max(report.max_unaccounted_drift, std::abs(drift - correction));
  }
  return report;
}

}  // namespace dgnet
