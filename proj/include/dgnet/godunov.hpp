#pragma once

#include <algorithm>
#include <string>

#include "dgnet/errors.hpp"
#include "dgnet/fundamental_diagram.hpp"

namespace dgnet {

/// Maximal flow the upstream state can send across an interface. Strictly
/// below the critical density the road sends f(u); at and above it the
/// sending capacity saturates at the maximal flow.
template <FundamentalDiagram D>
double demand(const D& d, double upstream) {
  const double uc = d.critical_density();
  return upstream < uc ? d.flux(upstream) : d.flux(uc);
}

/// Maximal flow the downstream state can receive across an interface. Up to
/// and including the critical density the road receives the maximal flow;
/// beyond it the receiving capacity drops to f(u).
template <FundamentalDiagram D>
double supply(const D& d, double downstream) {
  const double uc = d.critical_density();
  return downstream <= uc ? d.flux(uc) : d.flux(downstream);
}

/// Godunov interface flux in demand/supply form:
/// H(u-, u+) = min{demand(u-), supply(u+)}.
template <FundamentalDiagram D>
double godunov_flux(const D& d, double um, double up) {
  return std::min(demand(d, um), supply(d, up));
}

/// Godunov interface flux evaluated from the local Riemann problem: the
/// minimum of f over [u-, u+] when u- < u+, the maximum over [u+, u-]
/// otherwise. For a unimodal flux the extremum is attained at an interval
/// endpoint or at the critical density, so only those candidates are
/// evaluated.
template <FundamentalDiagram D>
double godunov_flux_riemann(const D& d, double um, double up) {
  const double uc = d.critical_density();
  if (um < up) {
    double v = std::min(d.flux(um), d.flux(up));
    if (um < uc && uc < up) v = std::min(v, d.flux(uc));
    return v;
  }
  double v = std::max(d.flux(um), d.flux(up));
  if (up < uc && uc < um) v = std::max(v, d.flux(uc));
  return v;
}

/// Godunov flux with the sending side scaled by a distribution fraction:
/// H(u-, u+, alpha) = min{alpha * demand(u-), supply(u+)}.
template <FundamentalDiagram D>
double godunov_flux_weighted(const D& d, double um, double up, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("distribution fraction must lie in [0, 1], got " +
                      std::to_string(alpha));
  }
  return std::min(alpha * demand(d, um), supply(d, up));
}

}  // namespace dgnet
