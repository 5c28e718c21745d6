#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <utility>
#include <vector>

#include "dgnet/legendre.hpp"
#include "dgnet/mesh.hpp"
#include "dgnet/network.hpp"

namespace dgnet {

/// Modal Legendre coefficients of one road's discrete solution:
/// coeffs(k, m) is the coefficient of P_m on element k, so
/// u_h(xi)|_k = sum_m coeffs(k, m) P_m(xi).
struct DGState {
  int degree = 1;
  Eigen::ArrayXXd coeffs;

  int num_elements() const { return static_cast<int>(coeffs.rows()); }

  double cell_average(int k) const { return coeffs(k, 0); }

  double evaluate(int k, double xi) const {
    double u = 0.0;
    for (int m = 0; m <= degree; ++m) u += coeffs(k, m) * legendre_eval(m, xi).value;
    return u;
  }

  // P_m(-1) = (-1)^m and P_m(1) = 1, so the traces are alternating sums.
  double left_trace(int k) const {
    double u = 0.0;
    for (int m = 0; m <= degree; ++m) u += (m % 2 == 0 ? coeffs(k, m) : -coeffs(k, m));
    return u;
  }
  double right_trace(int k) const {
    double u = 0.0;
    for (int m = 0; m <= degree; ++m) u += coeffs(k, m);
    return u;
  }
};

/// States of every road in network order.
using NetworkState = std::vector<DGState>;

/// L2 projection of a road's piecewise-constant initial data:
/// c_m = (2m+1)/2 * integral of u_0 against P_m, evaluated in closed form
/// through the Legendre antiderivatives, so the projection is exact whether
/// or not the data's jumps align with element faces.
inline DGState project_initial(const RoadSpec& road, const Mesh& mesh, int degree) {
  if (degree < 0) throw DomainError("polynomial degree must be >= 0");
  DGState state;
  state.degree = degree;
  state.coeffs = Eigen::ArrayXXd::Zero(mesh.num_elements(), degree + 1);
  for (int k = 0; k < mesh.num_elements(); ++k) {
    const double xl = mesh.nodes[k], xr = mesh.nodes[k + 1];
    for (const InitialPiece& piece : road.initial) {
      const double s = std::max(xl, piece.from);
      const double t = std::min(xr, piece.to);
      if (t <= s) continue;
      const double xi_s = mesh.to_reference(k, s);
      const double xi_t = mesh.to_reference(k, t);
      for (int m = 0; m <= degree; ++m) {
        const double integral =
            legendre_antiderivative(m, xi_t) - legendre_antiderivative(m, xi_s);
        state.coeffs(k, m) += (2.0 * m + 1.0) / 2.0 * piece.value * integral;
      }
    }
  }
  return state;
}

/// Element endpoint values of one road, grouped for flux assembly.
struct RoadTraces {
  double left_end = 0.0;   // u_h^+ at the road's first node
  double right_end = 0.0;  // u_h^- at the road's last node
  std::vector<std::pair<double, double>> interior;  // (u^-, u^+) per interior face
};

inline RoadTraces road_traces(const DGState& state) {
  RoadTraces t;
  const int n = state.num_elements();
  t.left_end = state.left_trace(0);
  t.right_end = state.right_trace(n - 1);
  t.interior.reserve(n - 1);
  for (int k = 1; k < n; ++k) {
    t.interior.emplace_back(state.right_trace(k - 1), state.left_trace(k));
  }
  return t;
}

inline std::vector<RoadTraces> traces(const NetworkState& states) {
  std::vector<RoadTraces> all;
  all.reserve(states.size());
  for (const DGState& s : states) all.push_back(road_traces(s));
  return all;
}

}  // namespace dgnet
