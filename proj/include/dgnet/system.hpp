#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "dgnet/dg_state.hpp"
#include "dgnet/fundamental_diagram.hpp"
#include "dgnet/junction_flux.hpp"
#include "dgnet/legendre.hpp"
#include "dgnet/mesh.hpp"
#include "dgnet/network.hpp"

namespace dgnet {

/// Everything fixed for the lifetime of a run: the validated network, the
/// flow-density relation, the junction coupling rule, the meshes, and the
/// reference-element tables (basis values and derivatives at the quadrature
/// points).
template <FundamentalDiagram D>
struct NetworkSystem {
  ValidatedNetwork network;
  D diagram;
  JunctionFluxKind flux_kind = JunctionFluxKind::AlphaOutside;
  int degree = 1;
  QuadratureRule quadrature;
  std::vector<Mesh> meshes;
  Eigen::MatrixXd basis_values;       // q x (degree+1)
  Eigen::MatrixXd basis_derivatives;  // q x (degree+1)
};

/// Assemble a system. quad_points = 0 selects the default q = degree + 1,
/// which integrates the quadratic volume term of a linear basis under the
/// Greenshields flux exactly.
template <FundamentalDiagram D>
NetworkSystem<D> make_system(ValidatedNetwork network, D diagram,
                             JunctionFluxKind kind, int degree = 1,
                             int quad_points = 0) {
  if (degree < 0 || degree > 1) {
    throw UnsupportedDegreeError("supported polynomial degrees are 0 and 1, got " +
                                 std::to_string(degree));
  }
  NetworkSystem<D> sys{std::move(network), std::move(diagram), kind, degree,
                       gauss_rule(quad_points > 0 ? quad_points : degree + 1),
                       {},  {},  {}};
  sys.meshes.reserve(sys.network.roads().size());
  for (const RoadSpec& road : sys.network.roads()) sys.meshes.push_back(build_mesh(road));

  const int q = sys.quadrature.size();
  sys.basis_values.resize(q, degree + 1);
  sys.basis_derivatives.resize(q, degree + 1);
  for (int g = 0; g < q; ++g)
    for (int m = 0; m <= degree; ++m) {
      const LegendreEval e = legendre_eval(m, sys.quadrature.points[g]);
      sys.basis_values(g, m) = e.value;
      sys.basis_derivatives(g, m) = e.derivative;
    }
  return sys;
}

/// Project every road's initial data.
template <FundamentalDiagram D>
NetworkState initial_state(const NetworkSystem<D>& sys) {
  NetworkState states;
  const auto roads = sys.network.roads();
  states.reserve(roads.size());
  for (std::size_t r = 0; r < roads.size(); ++r) {
    states.push_back(project_initial(roads[r], sys.meshes[r], sys.degree));
  }
  return states;
}

}  // namespace dgnet
