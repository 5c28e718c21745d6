#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dgnet/dg_state.hpp"
#include "dgnet/godunov.hpp"
#include "dgnet/junction_flux.hpp"
#include "dgnet/system.hpp"

namespace dgnet {

/// Evaluate the selected coupling rule at every junction for the given traces.
template <FundamentalDiagram D>
std::vector<JunctionFluxResult> junction_fluxes(const NetworkSystem<D>& sys,
                                                const std::vector<RoadTraces>& tr) {
  std::vector<JunctionFluxResult> results;
  results.reserve(sys.network.junctions().size());
  std::vector<double> in, out;
  for (const Junction& junction : sys.network.junctions()) {
    in.clear();
    out.clear();
    for (int r : junction.incoming) in.push_back(tr[r].right_end);
    for (int r : junction.outgoing) out.push_back(tr[r].left_end);
    results.push_back(evaluate_junction_flux(sys.diagram, sys.flux_kind, in, out,
                                             junction.distribution));
  }
  return results;
}

/// Time derivatives of the modal coefficients, road by road.
using RhsValues = std::vector<Eigen::ArrayXXd>;

/// Semidiscrete spatial operator. Per element K and mode m,
///   dc_m/dt = (2m+1)/h_K * (volume_m - H_right + (-1)^m H_left),
/// with the volume term integrated by the system's Gauss rule, interior faces
/// coupled by the Godunov flux, junction faces by the selected junction rule,
/// and unattached ends by the Godunov flux against the boundary datum.
template <FundamentalDiagram D>
RhsValues semidiscrete_rhs(const NetworkSystem<D>& sys, const NetworkState& states,
                           [[maybe_unused]] double t) {
  const auto roads = sys.network.roads();
  const std::vector<RoadTraces> tr = traces(states);
  const std::vector<JunctionFluxResult> jf = junction_fluxes(sys, tr);
  const double u_max = sys.diagram.max_density();

  RhsValues rhs(roads.size());
  const int q = sys.quadrature.size();
  Eigen::Map<const Eigen::VectorXd> w(sys.quadrature.weights.data(), q);
  // (q x modes) tables contracted against point values of f(u_h):
  // volume(k, m) = sum_g w_g f(u_h(xi_g)) P_m'(xi_g).
  const Eigen::MatrixXd weighted_derivatives = w.asDiagonal() * sys.basis_derivatives;

  std::vector<double> face_flux;
  for (std::size_t r = 0; r < roads.size(); ++r) {
    const DGState& state = states[r];
    const Mesh& mesh = sys.meshes[r];
    const int n = state.num_elements();
    const RoadEnds& ends = sys.network.ends(static_cast<int>(r));

    face_flux.assign(n + 1, 0.0);
    if (ends.upstream_junction) {
      face_flux[0] = jf[*ends.upstream_junction].outflow(ends.upstream_slot);
    } else {
      const double datum =
          boundary_datum(*roads[r].left_boundary, tr[r].left_end, u_max);
      face_flux[0] = godunov_flux(sys.diagram, datum, tr[r].left_end);
    }
    for (int i = 0; i < n - 1; ++i) {
      const auto& [um, up] = tr[r].interior[i];
      face_flux[i + 1] = godunov_flux(sys.diagram, um, up);
    }
    if (ends.downstream_junction) {
      face_flux[n] = jf[*ends.downstream_junction].inflow(ends.downstream_slot);
    } else {
      const double datum =
          boundary_datum(*roads[r].right_boundary, tr[r].right_end, u_max);
      face_flux[n] = godunov_flux(sys.diagram, tr[r].right_end, datum);
    }

    const Eigen::MatrixXd values = state.coeffs.matrix() * sys.basis_values.transpose();
    const Eigen::MatrixXd f_values =
        values.unaryExpr([&](double u) { return sys.diagram.flux(u); });
    const Eigen::MatrixXd volume = f_values * weighted_derivatives;

    Eigen::ArrayXXd& out = rhs[r];
    out.resize(n, sys.degree + 1);
    for (int k = 0; k < n; ++k) {
      const double inv_h = 1.0 / mesh.element_size(k);
      for (int m = 0; m <= sys.degree; ++m) {
        const double left_sign = (m % 2 == 0) ? 1.0 : -1.0;
        out(k, m) = (2.0 * m + 1.0) * inv_h *
                    (volume(k, m) - face_flux[k + 1] + left_sign * face_flux[k]);
      }
    }
  }
  return rhs;
}

}  // namespace dgnet
