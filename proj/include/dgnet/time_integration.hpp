#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgnet/diagnostics.hpp"
#include "dgnet/limiter.hpp"
#include "dgnet/spatial_operator.hpp"
#include "dgnet/system.hpp"
#include "dgnet/trajectory.hpp"

namespace dgnet {

enum class Integrator { Euler, AdamsBashforth2 };

inline const char* to_string(Integrator i) {
  return i == Integrator::Euler ? "euler" : "ab2";
}

inline Integrator parse_integrator(std::string_view text) {
  if (text == "euler") return Integrator::Euler;
  if (text == "ab2") return Integrator::AdamsBashforth2;
  throw ParseError("unknown integrator \"" + std::string(text) +
                   "\" (expected euler or ab2)");
}

enum class BoundsMode { Report, Strict };

inline const char* to_string(BoundsMode m) {
  return m == BoundsMode::Report ? "report" : "strict";
}

inline BoundsMode parse_bounds_mode(std::string_view text) {
  if (text == "report") return BoundsMode::Report;
  if (text == "strict") return BoundsMode::Strict;
  throw ParseError("unknown bounds mode \"" + std::string(text) +
                   "\" (expected report or strict)");
}

struct SolverConfig {
  double dt = 1e-4;
  double t_end = 1.0;
  Integrator integrator = Integrator::Euler;
  double limiter_m = 0.0;
  BoundsMode bounds_mode = BoundsMode::Report;
  int output_every = 1;
};

/// Two-step Adams-Bashforth update for one degree of freedom.
inline double ab2_update(double u, double rhs_now, double rhs_prev, double dt) {
  return u + dt * (1.5 * rhs_now - 0.5 * rhs_prev);
}

namespace detail {

/// Limiter then bounds enforcement on every road, once per completed step.
template <FundamentalDiagram D>
void post_step(const NetworkSystem<D>& sys, NetworkState& states,
               const SolverConfig& config, BoundsLedger& ledger) {
  const double u_max = sys.diagram.max_density();
  for (std::size_t r = 0; r < states.size(); ++r) {
    apply_minmod_limiter(states[r], sys.meshes[r], config.limiter_m);
    const BoundsReport report = enforce_bounds(states[r], sys.meshes[r], u_max);
    ledger.add(report);
    if (config.bounds_mode == BoundsMode::Strict && report.clamped_elements > 0) {
      throw MassViolationError(
          "strict bounds mode: a cell average on road " +
          std::to_string(sys.network.roads()[r].id) + " left [0, u_max] (mass change " +
          std::to_string(report.mass_correction) + ")");
    }
  }
}

template <FundamentalDiagram D>
NetworkState advance_weighted(const NetworkSystem<D>& sys, const NetworkState& states,
                              const RhsValues& rhs_now, const RhsValues& rhs_prev,
                              double dt, const SolverConfig& config,
                              BoundsLedger& ledger) {
  NetworkState next = states;
  for (std::size_t r = 0; r < next.size(); ++r) {
    next[r].coeffs += dt * (1.5 * rhs_now[r] - 0.5 * rhs_prev[r]);
  }
  post_step(sys, next, config, ledger);
  return next;
}

template <FundamentalDiagram D>
NetworkState advance_euler(const NetworkSystem<D>& sys, const NetworkState& states,
                           const RhsValues& rhs, double dt, const SolverConfig& config,
                           BoundsLedger& ledger) {
  NetworkState next = states;
  for (std::size_t r = 0; r < next.size(); ++r) {
    next[r].coeffs += dt * rhs[r];
  }
  post_step(sys, next, config, ledger);
  return next;
}

}  // namespace detail

/// One forward Euler step followed by limiting and bounds enforcement.
template <FundamentalDiagram D>
NetworkState step_euler(const NetworkSystem<D>& sys, const NetworkState& states,
                        double t, const SolverConfig& config, BoundsLedger& ledger) {
  const RhsValues rhs = semidiscrete_rhs(sys, states, t);
  return detail::advance_euler(sys, states, rhs, config.dt, config, ledger);
}

/// One two-step Adams-Bashforth step. rhs_prev must hold the operator
/// evaluated at the previous time level's state (as evolved, i.e. after its
/// limiting). If rhs_now_out is given it receives the operator at the input
/// state for reuse as the next step's history.
template <FundamentalDiagram D>
NetworkState step_ab2(const NetworkSystem<D>& sys, const NetworkState& states,
                      const RhsValues& rhs_prev, double t, const SolverConfig& config,
                      BoundsLedger& ledger, RhsValues* rhs_now_out = nullptr) {
  RhsValues rhs_now = semidiscrete_rhs(sys, states, t);
  NetworkState next =
      detail::advance_weighted(sys, states, rhs_now, rhs_prev, config.dt, config, ledger);
  if (rhs_now_out) *rhs_now_out = std::move(rhs_now);
  return next;
}

struct RunResult {
  Trajectory trajectory;
  std::vector<DiagnosticsRecord> diagnostics;  // aligned with the snapshots
  BoundsLedger bounds;
  double cfl_number = 0.0;
  int cfl_warnings = 0;
};

/// Advance the projected initial data to t_end, recording a snapshot and a
/// diagnostics record at t = 0, every output_every-th step, and t_end. The
/// advisory CFL number max|f'| dt / min h is checked against 1 (piecewise
/// constant) or 1/3 (piecewise linear); exceeding it is only warned about.
template <FundamentalDiagram D>
RunResult run_simulation(const NetworkSystem<D>& sys, const SolverConfig& config) {
  if (!(config.dt > 0.0)) throw ValidationError("solver dt must be positive");
  if (!(config.t_end >= 0.0)) throw ValidationError("solver t_end must be >= 0");
  if (config.output_every < 1) throw ValidationError("solver output_every must be >= 1");
  if (!(config.limiter_m >= 0.0)) throw ValidationError("solver limiter_M must be >= 0");

  RunResult result;
  double min_h = std::numeric_limits<double>::infinity();
  for (const Mesh& mesh : sys.meshes) {
    for (int k = 0; k < mesh.num_elements(); ++k) {
      min_h = std::min(min_h, mesh.element_size(k));
    }
  }
  result.cfl_number = sys.diagram.max_wave_speed() * config.dt / min_h;
  const double cfl_limit = sys.degree == 0 ? 1.0 : 1.0 / 3.0;
  if (result.cfl_number > cfl_limit) result.cfl_warnings = 1;

  NetworkState states = initial_state(sys);
  const long steps = std::llround(config.t_end / config.dt);

  auto record = [&](long step) {
    const double t = step * config.dt;
    result.trajectory.snapshots.push_back({t, states});
    result.diagnostics.push_back(collect_record(sys, states, t, result.bounds));
  };
  record(0);

  RhsValues rhs_prev;
  for (long n = 0; n < steps; ++n) {
    const double t = n * config.dt;
    if (config.integrator == Integrator::Euler) {
      const RhsValues rhs = semidiscrete_rhs(sys, states, t);
      states = detail::advance_euler(sys, states, rhs, config.dt, config, result.bounds);
    } else {
      RhsValues rhs_now = semidiscrete_rhs(sys, states, t);
      if (rhs_prev.empty()) {
        states = detail::advance_euler(sys, states, rhs_now, config.dt, config,
                                       result.bounds);
      } else {
        states = detail::advance_weighted(sys, states, rhs_now, rhs_prev, config.dt,
                                          config, result.bounds);
      }
      rhs_prev = std::move(rhs_now);
    }
    if ((n + 1) % config.output_every == 0 || n + 1 == steps) record(n + 1);
  }
  return result;
}

}  // namespace dgnet
