#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <string_view>

#include "dgnet/errors.hpp"
#include "dgnet/godunov.hpp"

namespace dgnet {

/// Coupling rule used to turn junction traces into interface fluxes.
enum class JunctionFluxKind {
  AlphaOutside,   ///< distribute pairwise Godunov fluxes by the matrix
  AlphaInside,    ///< scale the sending capacity inside each Godunov flux
  MaxPossible1x2  ///< maximize total throughput of a 1-in/2-out junction
};

inline const char* to_string(JunctionFluxKind kind) {
  switch (kind) {
    case JunctionFluxKind::AlphaOutside: return "alpha-outside";
    case JunctionFluxKind::AlphaInside: return "alpha-inside";
    case JunctionFluxKind::MaxPossible1x2: return "max-possible";
  }
  return "unknown";
}

inline JunctionFluxKind parse_flux_kind(std::string_view text) {
  if (text == "alpha-outside") return JunctionFluxKind::AlphaOutside;
  if (text == "alpha-inside") return JunctionFluxKind::AlphaInside;
  if (text == "max-possible") return JunctionFluxKind::MaxPossible1x2;
  throw ParseError("unknown flux kind \"" + std::string(text) +
                   "\" (expected alpha-outside, alpha-inside or max-possible)");
}

/// Fluxes a junction rule assigns to its attached road ends. inflow[i] leaves
/// incoming road i through its right end; outflow[j] enters outgoing road j
/// through its left end. pairwise(i, j) is the road-to-road term the rule was
/// assembled from.
struct JunctionFluxResult {
  Eigen::VectorXd inflow;
  Eigen::VectorXd outflow;
  Eigen::MatrixXd pairwise;
};

namespace detail {

inline void check_junction_shapes(std::span<const double> in,
                                  std::span<const double> out,
                                  const Eigen::MatrixXd& A) {
  if (A.rows() != static_cast<Eigen::Index>(out.size()) ||
      A.cols() != static_cast<Eigen::Index>(in.size())) {
    throw DimensionError(
        "distribution matrix is " + std::to_string(A.rows()) + "x" +
        std::to_string(A.cols()) + " but the junction has " +
        std::to_string(in.size()) + " incoming and " +
        std::to_string(out.size()) + " outgoing roads");
  }
  if (in.empty() || out.empty()) {
    throw DimensionError("junction needs at least one incoming and one outgoing road");
  }
}

}  // namespace detail

/// Junction coupling that distributes plain pairwise Godunov fluxes:
/// H_out[j] = sum_i A(j,i) H(u_i^-, u_j^+) and
/// H_in[i]  = sum_j A(j,i) H(u_i^-, u_j^+).
template <FundamentalDiagram D>
JunctionFluxResult junction_alpha_outside(const D& d, std::span<const double> in,
                                          std::span<const double> out,
                                          const Eigen::MatrixXd& A) {
  detail::check_junction_shapes(in, out, A);
  const auto n = static_cast<Eigen::Index>(in.size());
  const auto m = static_cast<Eigen::Index>(out.size());

  JunctionFluxResult r;
  r.pairwise.resize(n, m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      r.pairwise(i, j) = godunov_flux(d, in[i], out[j]);

  r.inflow = Eigen::VectorXd::Zero(n);
  r.outflow = Eigen::VectorXd::Zero(m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const double term = A(j, i) * r.pairwise(i, j);
      r.inflow(i) += term;
      r.outflow(j) += term;
    }
  return r;
}

/// Junction coupling that scales the sending capacity inside each Godunov
/// flux: H_out[j] = sum_i H(u_i^-, u_j^+, A(j,i)) and
/// H_in[i] = sum_j H(u_i^-, u_j^+, A(j,i)).
template <FundamentalDiagram D>
JunctionFluxResult junction_alpha_inside(const D& d, std::span<const double> in,
                                         std::span<const double> out,
                                         const Eigen::MatrixXd& A) {
  detail::check_junction_shapes(in, out, A);
  const auto n = static_cast<Eigen::Index>(in.size());
  const auto m = static_cast<Eigen::Index>(out.size());

  JunctionFluxResult r;
  r.pairwise.resize(n, m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      r.pairwise(i, j) = godunov_flux_weighted(d, in[i], out[j], A(j, i));

  r.inflow = Eigen::VectorXd::Zero(n);
  r.outflow = Eigen::VectorXd::Zero(m);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      r.inflow(i) += r.pairwise(i, j);
      r.outflow(j) += r.pairwise(i, j);
    }
  return r;
}

/// 1-in/2-out coupling that maximizes the total flow through the junction
/// subject to the split fractions alpha and 1 - alpha:
/// H_in = min{demand(u_1^-), supply(u_2^+)/alpha, supply(u_3^+)/(1-alpha)}.
/// Either outgoing road at zero supply therefore blocks the whole junction.
template <FundamentalDiagram D>
JunctionFluxResult junction_max_possible_1x2(const D& d, double in_trace,
                                             std::span<const double> out,
                                             double alpha) {
  if (out.size() != 2) {
    throw UnsupportedJunctionError(
        "max-possible coupling is implemented for 1-in/2-out junctions only");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DegenerateAlphaError(
        "max-possible coupling needs a split fraction strictly inside (0, 1), got " +
        std::to_string(alpha));
  }
  const double h1 = std::min({demand(d, in_trace), supply(d, out[0]) / alpha,
                              supply(d, out[1]) / (1.0 - alpha)});

  JunctionFluxResult r;
  r.inflow = Eigen::VectorXd::Constant(1, h1);
  r.outflow.resize(2);
  r.outflow << alpha * h1, (1.0 - alpha) * h1;
  r.pairwise = r.outflow.transpose();
  return r;
}

/// Evaluate the selected rule on one junction's traces. For the max-possible
/// rule the junction must be 1-in/2-out and the split is read from A(0, 0).
template <FundamentalDiagram D>
JunctionFluxResult evaluate_junction_flux(const D& d, JunctionFluxKind kind,
                                          std::span<const double> in,
                                          std::span<const double> out,
                                          const Eigen::MatrixXd& A) {
  switch (kind) {
    case JunctionFluxKind::AlphaOutside:
      return junction_alpha_outside(d, in, out, A);
    case JunctionFluxKind::AlphaInside:
      return junction_alpha_inside(d, in, out, A);
    case JunctionFluxKind::MaxPossible1x2:
      detail::check_junction_shapes(in, out, A);
      if (in.size() != 1 || out.size() != 2) {
        throw UnsupportedJunctionError(
            "max-possible coupling is implemented for 1-in/2-out junctions only, got " +
            std::to_string(in.size()) + "-in/" + std::to_string(out.size()) + "-out");
      }
      return junction_max_possible_1x2(d, in[0], out, A(0, 0));
  }
  throw DomainError("unknown junction flux kind");
}

/// Per-outgoing-road deviation from the prescribed traffic distribution:
/// E[j] = H_out[j] - sum_i A(j,i) H_in[i]. Zero means the realized split
/// matches the matrix exactly.
inline Eigen::VectorXd distribution_error(const JunctionFluxResult& r,
                                          const Eigen::MatrixXd& A) {
  if (A.rows() != r.outflow.size() || A.cols() != r.inflow.size()) {
    throw DimensionError("distribution matrix shape does not match the flux result");
  }
  return r.outflow - A * r.inflow;
}

}  // namespace dgnet
